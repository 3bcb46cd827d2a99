"""Command line entry point ``equindex``.

Exit codes: 0 ok, 1 I/O failure, 2 parse or validation error,
3 non-isolated special point / infinite colength, 4 genericity failure,
5 reduction budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import document
from .conservation import conserve
from .equivariant import InvalidProblem, validate
from .indices import GenericityFailure, NonIsolatedError, chern_obstruction, gsv_index
from .local_algebra import BudgetExceeded
from .oracle import DEFAULT_MAX_DEGREE

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_NON_ISOLATED, EXIT_GENERICITY, EXIT_BUDGET = range(6)


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if not value:
        raise argparse.ArgumentTypeError("epsilon must be nonzero")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equindex",
        description="Equivariant GSV-indices and Chern obstructions of 1-form collections.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="problem document (JSON)")
    common.add_argument("--oracle", action="store_true", help="cross-check with the truncation oracle")
    common.add_argument("--json", action="store_true", help="emit a machine-readable report")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--epsilon", type=_rational, default=Fraction(1, 100), metavar="P/Q")
    common.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE, metavar="D")
    common.add_argument("--budget", type=int, default=None, metavar="N",
                        help="maximum number of reduction steps")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in [("validate", "check equivariance and profile constraints"),
                       ("index", "compute the equivariant GSV-index"),
                       ("chern", "compute the Chern obstruction"),
                       ("conserve", "check conservation of number under a constant shift")]:
        sub.add_parser(name, parents=[common], help=text)
    return parser


def _emit(args, payload: dict, lines: list[str], out) -> None:
    if args.json:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)

    try:
        with open(args.file) as fh:
            text = fh.read()
    except OSError as exc:
        err.write(f"error: cannot read {args.file}: {exc.strerror or exc}\n")
        return EXIT_IO
    try:
        problem = document.loads(text)
    except document.DocumentError as exc:
        err.write(f"PARSE_ERROR {exc}\n")
        return EXIT_INVALID

    report = validate(problem)
    if args.command == "validate":
        _emit(args, {"valid": report.ok, "violations": report.violations, "notes": report.notes},
              report.lines(), out)
        return EXIT_OK if report.ok else EXIT_INVALID
    if not report.ok:
        err.write("\n".join(report.lines()) + "\n")
        return EXIT_INVALID

    try:
        if args.command == "index":
            result = gsv_index(problem, oracle=args.oracle, max_degree=args.max_degree, budget=args.budget)
            lines = [f"INDEX {result.value}"]
            if args.oracle:
                lines.append(f"ORACLE {result.oracle.status}")
            payload = result.to_dict()
            payload["problem"] = document.problem_to_dict(problem)
            _emit(args, payload, lines, out)
        elif args.command == "chern":
            result = chern_obstruction(problem, args.seed, budget=args.budget, oracle=args.oracle,
                                       max_degree=args.max_degree)
            lines = [f"CHERN {result.value}",
                     f"INDEX {result.index.value}  GENERIC {result.generic.value}",
                     "SEEDS " + " ".join(map(str, result.seeds))]
            if args.oracle:
                lines.append(f"ORACLE {result.index.oracle.status}")
            payload = result.to_dict()
            payload["problem"] = document.problem_to_dict(problem)
            _emit(args, payload, lines, out)
        else:
            result = conserve(problem, args.epsilon, args.seed, budget=args.budget)
            payload = result.to_dict()
            payload.update(epsilon=str(args.epsilon), seed=args.seed)
            _emit(args, payload, result.lines(), out)
    except NonIsolatedError as exc:
        out.write(f"NON_ISOLATED {exc}\n")
        return EXIT_NON_ISOLATED
    except GenericityFailure as exc:
        out.write(f"GENERICITY_FAILURE {exc}\n")
        return EXIT_GENERICITY
    except BudgetExceeded as exc:
        out.write(f"BUDGET_EXCEEDED {exc}\n")
        return EXIT_BUDGET
    except InvalidProblem as exc:
        err.write("\n".join(exc.report.lines()) + "\n")
        return EXIT_INVALID
    return EXIT_OK


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
