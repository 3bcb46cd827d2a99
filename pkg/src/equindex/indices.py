"""Equivariant GSV-index, smooth-case index and Chern obstruction.

The index of a collection of holomorphic equivariant 1-forms is the colength,
in the local ring of the fixed subspace, of the ideal built by
:func:`equindex.equivariant.assemble_ideal`.  For an isolated complete
intersection the Chern obstruction is the index minus the index of a
generic collection of equivariant linear forms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import oracle as _oracle
from .equivariant import (
    EquivariantOneForm,
    IndexProblem,
    ProfilePair,
    assemble_ideal,
    fixed_names,
    require_valid,
)
from .group_rep import DiagonalRepresentation
from .local_algebra import LOCAL, standard_basis
from .polyring import Polynomial, format_polynomial

DEFAULT_BOUND = 97
DEFAULT_RESAMPLES = 8


class NonIsolatedError(ArithmeticError):
    """The collection has a non-isolated special point (infinite colength)."""


class GenericityFailure(RuntimeError):
    """Independent generic linear samples did not produce a common index."""


@dataclass(frozen=True)
class OracleStatus:
    status: str  # "skipped", "AGREE", "DISAGREE", "ORACLE_INCONCLUSIVE"
    value: int | None = None


@dataclass(frozen=True)
class IndexReport:
    value: int
    generators: tuple[str, ...]
    variables: tuple[str, ...]
    leading_exponents: tuple[tuple[int, ...], ...]
    standard_monomials: int
    basis_size: int
    oracle: OracleStatus = OracleStatus("skipped")

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "variables": list(self.variables),
            "generators": list(self.generators),
            "leading_exponents": [list(e) for e in self.leading_exponents],
            "standard_monomials": self.standard_monomials,
            "basis_size": self.basis_size,
            "oracle": {"status": self.oracle.status, "value": self.oracle.value},
        }


def ideal_index(generators: Sequence[Polynomial], names: Sequence[str], *,
                oracle: bool = False, max_degree: int = _oracle.DEFAULT_MAX_DEGREE,
                budget: int | None = None) -> IndexReport:
    """Local colength of an ideal in the fixed variables, as a report."""
    nvars = len(names)
    basis = standard_basis(generators, LOCAL, budget, nvars=nvars)
    if nvars == 0:
        value = 0 if basis.generators else 1
        corners = ()
    else:
        st = basis.staircase()
        if not basis.generators or not st.is_finite:
            raise NonIsolatedError(
                "infinite colength: the collection has a non-isolated special point")
        value = len(st.standard_monomials)
        corners = st.corners
    status = OracleStatus("skipped")
    if oracle:
        check = _oracle.compare(value, _oracle.macaulay_colength(generators, max_degree, nvars=nvars))
        status = OracleStatus(check.verdict, check.oracle)
    return IndexReport(
        value=value,
        generators=tuple(format_polynomial(g, names) for g in generators),
        variables=tuple(names),
        leading_exponents=tuple(corners),
        standard_monomials=value,
        basis_size=len(basis.generators),
        oracle=status,
    )


def gsv_index(problem: IndexProblem, *, oracle: bool = False,
              max_degree: int = _oracle.DEFAULT_MAX_DEGREE, budget: int | None = None) -> IndexReport:
    gens = assemble_ideal(problem)
    return ideal_index(gens, fixed_names(problem), oracle=oracle, max_degree=max_degree, budget=budget)


def smooth_index(rep: DiagonalRepresentation, profile: Sequence[ProfilePair], **kwargs) -> IndexReport:
    """Index of a collection on the ambient space itself (no equations)."""
    return gsv_index(IndexProblem(rep, (), tuple(profile)), **kwargs)


@dataclass(frozen=True)
class GenericSample:
    seed: int
    bound: int
    forms: tuple[tuple[EquivariantOneForm, ...], ...]  # one tuple per profile pair
    draws: int = 1  # how many collections were drawn from the stream for this one


def _draw(rng: random.Random, rep: DiagonalRepresentation, profile: Sequence[ProfilePair],
          count_of, bound: int) -> tuple[tuple[EquivariantOneForm, ...], ...]:
    N = rep.dimension
    out = []
    for pair in profile:
        block = rep.block(pair.character)
        forms = []
        for _ in range(count_of(pair)):
            while True:
                values = [rng.randint(-bound, bound) for _ in block]
                if any(values):
                    break
            coeffs = [Polynomial.zero(N)] * N
            for s, c in zip(block, values):
                coeffs[s] = Polynomial.constant(c, N)
            forms.append(EquivariantOneForm(pair.character, tuple(coeffs)))
        out.append(tuple(forms))
    return tuple(out)


def sample_generic_linear(rep: DiagonalRepresentation, equations, profile: Sequence[ProfilePair],
                          seed: int, bound: int = DEFAULT_BOUND, *, rng: random.Random | None = None,
                          ) -> GenericSample:
    """Constant-coefficient equivariant forms with integer entries in ``[-bound, bound]``.

    The coefficient of ``dx_s`` can only be a nonzero constant when ``x_s`` has
    the pair's weight, so each form is a random vector on that block.
    """
    problem = IndexProblem(rep, tuple(equations), tuple(profile))

    def count_of(pair):
        return problem.n(pair.character) - pair.k + 1

    rng = rng or random.Random(seed)
    return GenericSample(seed, bound, _draw(rng, rep, profile, count_of, bound))


def generic_index(problem: IndexProblem, seed: int, bound: int = DEFAULT_BOUND,
                  resamples: int = DEFAULT_RESAMPLES, budget: int | None = None
                  ) -> tuple[IndexReport, GenericSample]:
    """Index of a generic linear collection drawn from the stream ``seed``.

    Draws that give a non-isolated special point are discarded and the
    stream advanced, at most ``resamples`` times in total.
    """
    rng = random.Random(seed)
    for attempt in range(1, resamples + 1):
        sample = sample_generic_linear(problem.rep, problem.equations, problem.profile, seed, bound, rng=rng)
        try:
            report = gsv_index(problem.with_forms(sample.forms), budget=budget)
        except NonIsolatedError:
            continue
        return report, GenericSample(seed, bound, sample.forms, attempt)
    raise GenericityFailure(f"no isolated generic linear collection in {resamples} draws from seed {seed}")


@dataclass(frozen=True)
class ChernReport:
    value: int
    index: IndexReport
    generic: IndexReport
    seeds: tuple[int, int]
    generic_values: tuple[int, int]

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "seeds": list(self.seeds),
            "generic_values": list(self.generic_values),
            "index": self.index.to_dict(),
            "generic": self.generic.to_dict(),
        }


def chern_obstruction(problem: IndexProblem, seed: int = 0, *, bound: int = DEFAULT_BOUND,
                      resamples: int = DEFAULT_RESAMPLES, budget: int | None = None,
                      oracle: bool = False, max_degree: int = _oracle.DEFAULT_MAX_DEGREE) -> ChernReport:
    """Index of the collection minus the index of a generic linear collection.

    Two independent streams (``seed`` and ``seed + 1``) must give the same
    generic index; otherwise :class:`GenericityFailure` is raised.
    """
    require_valid(problem)
    index = gsv_index(problem, budget=budget, oracle=oracle, max_degree=max_degree)
    first, _ = generic_index(problem, seed, bound, resamples, budget)
    second, _ = generic_index(problem, seed + 1, bound, resamples, budget)
    if first.value != second.value:
        raise GenericityFailure(
            f"generic linear samples disagree: {first.value} (seed {seed}) vs {second.value} (seed {seed + 1})")
    return ChernReport(index.value - first.value, index, first, (seed, seed + 1), (first.value, second.value))
