"""Brute-force local colength by truncated linear algebra.

For a degree bound ``D`` let ``q_D = dim O/(I + m^D)``: the number of
monomials of degree ``< D`` minus the rank of the truncations of all
products ``x^a * g``.  Once ``q_D == q_{D+1}`` we have
``m^D ⊆ I + m^{D+1}``, hence ``m^D ⊆ I`` by Nakayama, and ``q_D`` is the
colength of ``I`` in the local ring.  No standard bases are involved, so this
is independent of :mod:`equindex.local_algebra`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .equivariant import IndexProblem, assemble_ideal
from .local_algebra import local_colength
from .polyring import Polynomial

NOT_STABILIZED = None
DEFAULT_MAX_DEGREE = 12


def monomials_below(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of total degree < ``degree``."""
    out = []
    for d in range(degree):
        for combo in itertools.combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for s in combo:
                e[s] += 1
            out.append(tuple(e))
    return out


def _rank(rows: list[dict]) -> int:
    """Rank of sparse rational rows (column -> value) by exact elimination."""
    pivots: dict[int, dict] = {}
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = 1 / row[col]
                pivots[col] = {c: v * inv for c, v in row.items()}
                break
            f = row[col]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def truncated_quotient_dimension(generators: Sequence[Polynomial], nvars: int, degree: int) -> int:
    """``q_D``: dimension of the local ring modulo ``I + m^D``."""
    basis = monomials_below(nvars, degree)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in generators:
        if g.is_zero():
            continue
        low = g.order()
        for a in basis:
            if sum(a) + low >= degree:
                continue
            row = {}
            for m, c in g.terms.items():
                prod = tuple(x + y for x, y in zip(a, m))
                if sum(prod) < degree:
                    row[index[prod]] = Fraction(c)
            if row:
                rows.append(row)
    return len(basis) - _rank(rows)


def macaulay_colength(generators: Sequence[Polynomial], max_degree: int = DEFAULT_MAX_DEGREE,
                      nvars: int | None = None) -> int | None:
    """Local colength at the origin, or ``NOT_STABILIZED`` within ``max_degree``."""
    if nvars is None:
        if not generators:
            raise ValueError("cannot infer the number of variables of an empty generator list")
        nvars = generators[0].nvars
    if nvars == 0:
        return 0 if any(not g.is_zero() for g in generators) else 1
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    prev = truncated_quotient_dimension(generators, nvars, 2)
    for d in range(3, max_degree + 1):
        cur = truncated_quotient_dimension(generators, nvars, d)
        if cur == prev:
            return cur
        prev = cur
    return NOT_STABILIZED


@dataclass(frozen=True)
class CrossCheck:
    verdict: str  # AGREE, DISAGREE or ORACLE_INCONCLUSIVE
    index: int | None  # None when the standard-basis colength is infinite
    oracle: int | None

    def __str__(self):
        if self.verdict == "AGREE":
            return f"AGREE({self.index})"
        if self.verdict == "DISAGREE":
            return f"DISAGREE({self.index},{self.oracle})"
        return "ORACLE_INCONCLUSIVE"


def compare(index_value, oracle_value) -> CrossCheck:
    finite = index_value is not None and index_value != float("inf")
    idx = int(index_value) if finite else None
    if oracle_value is NOT_STABILIZED:
        return CrossCheck("ORACLE_INCONCLUSIVE", idx, None)
    if idx == oracle_value:
        return CrossCheck("AGREE", idx, oracle_value)
    return CrossCheck("DISAGREE", idx, oracle_value)


def cross_check(problem: IndexProblem, max_degree: int = DEFAULT_MAX_DEGREE, budget: int | None = None) -> CrossCheck:
    """Run the standard-basis index and the truncation oracle on the same ideal."""
    nvars = len(problem.rep.fixed_block())
    gens = assemble_ideal(problem)
    index_value = local_colength(gens, budget, nvars=nvars)
    return compare(index_value, macaulay_colength(gens, max_degree, nvars=nvars))
