"""Reading and writing problem documents.

A problem document is JSON::

    {
      "group": {"orders": [2]},
      "variables": [{"name": "x", "weight": [0]}, {"name": "z", "weight": [1]}],
      "equations": [{"character": [0], "poly": "x^2 + z^2"}],
      "profile": [{"character": [1], "k": 1, "forms": [{"z": "x"}]}]
    }

A form is a map from coordinate name to the coefficient of ``d<name>``;
omitted coefficients are zero.  Polynomials use the grammar of
:func:`equindex.polyring.parse`.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .equivariant import EquivariantFunction, EquivariantOneForm, IndexProblem, ProfilePair
from .group_rep import AbelianGroup, DiagonalRepresentation
from .polyring import ParseError, Polynomial, format_polynomial, parse


class DocumentError(ValueError):
    """Malformed document: bad JSON, missing members or unparsable polynomials."""


def _require(obj: dict, key: str, kind, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise DocumentError(f"{where}: missing member {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise DocumentError(f"{where}.{key}: expected {kind.__name__ if isinstance(kind, type) else kind}")
    return value


def _int_list(value, where: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise DocumentError(f"{where}: expected a list of integers")
    return value


def _poly(text, names, where: str) -> Polynomial:
    if not isinstance(text, str):
        raise DocumentError(f"{where}: polynomial must be a string")
    try:
        return parse(text, names)
    except ParseError as exc:
        raise DocumentError(f"{where}: {exc}") from exc


def problem_from_dict(doc: Any) -> IndexProblem:
    if not isinstance(doc, dict):
        raise DocumentError("document: expected a JSON object")
    group_obj = _require(doc, "group", dict, "document")
    orders = _int_list(_require(group_obj, "orders", list, "group"), "group.orders")
    try:
        group = AbelianGroup(tuple(orders))
    except ValueError as exc:
        raise DocumentError(f"group.orders: {exc}") from exc

    def character(value, where):
        exps = _int_list(value, where)
        if len(exps) != group.rank:
            raise DocumentError(f"{where}: character needs {group.rank} exponents, got {len(exps)}")
        return group.character(exps)

    variables = _require(doc, "variables", list, "document")
    names, weights = [], []
    for t, var in enumerate(variables):
        where = f"variables[{t}]"
        names.append(_require(var, "name", str, where))
        weights.append(character(_require(var, "weight", list, where), f"{where}.weight"))
    try:
        rep = DiagonalRepresentation(group, tuple(weights), tuple(names))
    except ValueError as exc:
        raise DocumentError(f"variables: {exc}") from exc
    N = len(names)

    equations = []
    for t, eq in enumerate(doc.get("equations", [])):
        where = f"equations[{t}]"
        chi = character(_require(eq, "character", list, where), f"{where}.character")
        equations.append(EquivariantFunction(chi, _poly(_require(eq, "poly", str, where), names, f"{where}.poly")))

    pairs = []
    for t, pair in enumerate(_require(doc, "profile", list, "document")):
        where = f"profile[{t}]"
        chi = character(_require(pair, "character", list, where), f"{where}.character")
        k = _require(pair, "k", int, where)
        forms = []
        for j, form in enumerate(_require(pair, "forms", list, where)):
            fwhere = f"{where}.forms[{j}]"
            if not isinstance(form, dict):
                raise DocumentError(f"{fwhere}: expected an object mapping coordinates to coefficients")
            coeffs = [Polynomial.zero(N)] * N
            for name, text in form.items():
                if name not in names:
                    raise DocumentError(f"{fwhere}: unknown coordinate {name!r}")
                coeffs[names.index(name)] = _poly(text, names, f"{fwhere}.{name}")
            forms.append(EquivariantOneForm(chi, tuple(coeffs)))
        pairs.append(ProfilePair(chi, k, tuple(forms)))
    return IndexProblem(rep, tuple(equations), tuple(pairs))


def problem_to_dict(problem: IndexProblem) -> dict:
    rep = problem.rep
    names = rep.names
    return {
        "group": {"orders": list(rep.group.orders)},
        "variables": [{"name": n, "weight": list(w.exponents)} for n, w in zip(names, rep.weights)],
        "equations": [{"character": list(f.character.exponents), "poly": format_polynomial(f.poly, names)}
                      for f in problem.equations],
        "profile": [
            {
                "character": list(p.character.exponents),
                "k": p.k,
                "forms": [{names[s]: format_polynomial(a, names) for s, a in enumerate(w.coefficients) if a}
                          for w in p.forms],
            }
            for p in problem.profile
        ],
    }


def loads(text: str) -> IndexProblem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno} column {exc.colno} "
                            f"(position {exc.pos}): {exc.msg}") from exc
    return problem_from_dict(doc)


def load(path) -> IndexProblem:
    return loads(Path(path).read_text())


def dumps(problem: IndexProblem) -> str:
    return json.dumps(problem_to_dict(problem), indent=2)
