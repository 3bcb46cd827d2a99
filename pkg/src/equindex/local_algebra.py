"""Standard bases and quotient dimensions.

For the global order this is Buchberger's algorithm with ordinary top
reduction.  For the local order the division step is Mora's tangent-cone
normal form: a reducer is chosen by minimal ecart, and the intermediate
remainder is added to the reducer set whenever the chosen reducer has a
larger ecart.  That is what makes division terminate in the ring of germs
at the origin, where ``x**2`` and ``x**2 - x**3`` differ by a unit.

For the local order the computation also tracks the highest corner: as
soon as the leading monomials of the partial basis contain every monomial
of some degree ``D``, Nakayama's lemma gives ``m^D ⊆ I``.  From then on all
terms of degree ``>= D`` are discarded and the degree-``D`` monomials join
the basis, which keeps coefficient growth and term counts bounded.

Pair selection is the degree-normal strategy: the pending pair whose
lead-monomial lcm has the smallest total degree is processed first, ties
broken by insertion order.  The product criterion is only applied for the
global order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .polyring import (
    GLOBAL,
    LOCAL,
    Monomial,
    MonomialOrder,
    Polynomial,
    monomial_divides,
    monomial_lcm,
)

INFINITE = math.inf
DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """Raised when a computation uses more reduction steps than allowed."""


class _Counter:
    __slots__ = ("steps", "budget")

    def __init__(self, budget: int | None):
        self.steps = 0
        self.budget = DEFAULT_BUDGET if budget is None else budget

    def tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceeded(f"reduction budget of {self.budget} steps exceeded")


def ecart(p: Polynomial, order: MonomialOrder) -> int:
    return p.degree() - sum(p.leading_monomial(order))


def _reduce_by(h: Polynomial, hm: Monomial, hc, g: Polynomial, gm: Monomial, gc) -> Polynomial:
    shift = tuple(a - b for a, b in zip(hm, gm))
    return h - g.mul_term(shift, hc / gc)


def _nf_global(p: Polynomial, basis: Sequence[Polynomial], counter: _Counter) -> Polynomial:
    leads = [(g, *g.leading_term(GLOBAL)) for g in basis if g]
    h = p
    while h:
        hm, hc = h.leading_term(GLOBAL)
        for g, gm, gc in leads:
            if monomial_divides(gm, hm):
                counter.tick()
                h = _reduce_by(h, hm, hc, g, gm, gc)
                break
        else:
            return h
    return h


def truncate(p: Polynomial, cap: int | None) -> Polynomial:
    """Drop all terms of total degree ``>= cap``."""
    if cap is None or p.degree() < cap:
        return p
    return Polynomial._raw({m: c for m, c in p.terms.items() if sum(m) < cap}, p.nvars)


def _nf_mora(p: Polynomial, basis: Sequence[Polynomial], counter: _Counter,
             cap: int | None = None) -> Polynomial:
    # reducer set grows with intermediate remainders; entries are (poly, lm, lc, ecart)
    reducers = []
    for g in basis:
        if g:
            gm, gc = g.leading_term(LOCAL)
            reducers.append((g, gm, gc, g.degree() - sum(gm)))
    h = p
    while h:
        hm, hc = h.leading_term(LOCAL)
        best = None
        for entry in reducers:
            if monomial_divides(entry[1], hm) and (best is None or entry[3] < best[3]):
                best = entry
        if best is None:
            return h
        counter.tick()
        h_ecart = h.degree() - sum(hm)
        if best[3] > h_ecart:
            reducers.append((h, hm, hc, h_ecart))
        h = truncate(_reduce_by(h, hm, hc, best[0], best[1], best[2]), cap)
    return h


def normal_form(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder,
                budget: int | None = None, *, _counter: _Counter | None = None,
                _cap: int | None = None) -> Polynomial:
    """Weak normal form of ``p`` with respect to ``basis``.

    The leading monomial of the result is divisible by no leading monomial
    of the basis.  For the local order the result is a normal form of
    ``u * p`` for some unit ``u``, which is all that ideal membership and
    leading ideals need.
    """
    counter = _counter or _Counter(budget)
    if order.is_local:
        return _nf_mora(truncate(p, _cap), basis, counter, _cap)
    return _nf_global(p, basis, counter)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    fm, fc = f.leading_term(order)
    gm, gc = g.leading_term(order)
    lcm = monomial_lcm(fm, gm)
    a = tuple(x - y for x, y in zip(lcm, fm))
    b = tuple(x - y for x, y in zip(lcm, gm))
    return f.mul_term(a, 1 / fc) - g.mul_term(b, 1 / gc)


def minimal_monomials(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Minimal generators of the monomial ideal, sorted by degree then exponents."""
    result: list[Monomial] = []
    for m in sorted(set(monomials), key=lambda e: (sum(e), e)):
        if not any(monomial_divides(r, m) for r in result):
            result.append(m)
    return result


@dataclass(frozen=True)
class Staircase:
    nvars: int
    corners: tuple[Monomial, ...]  # minimal leading exponents
    standard_monomials: tuple[Monomial, ...] | None  # None when infinitely many

    @property
    def is_finite(self) -> bool:
        return self.standard_monomials is not None

    def is_standard(self, m: Monomial) -> bool:
        return not any(monomial_divides(c, m) for c in self.corners)


def staircase(leading: Iterable[Monomial], nvars: int) -> Staircase:
    corners = tuple(minimal_monomials(leading))
    bounds = []
    for s in range(nvars):
        pure = [c[s] for c in corners if all(e == 0 for t, e in enumerate(c) if t != s) and c[s] > 0]
        bounds.append(min(pure) if pure else None)
    if (0,) * nvars in corners:
        return Staircase(nvars, corners, ())
    if any(b is None for b in bounds):
        return Staircase(nvars, corners, None)
    # standard monomials form an order ideal: grow it from 1 one variable at a time
    found = []
    stack = [(0,) * nvars]
    seen = set(stack)
    while stack:
        m = stack.pop()
        found.append(m)
        for s in range(nvars):
            nxt = m[:s] + (m[s] + 1,) + m[s + 1:]
            if nxt[s] < bounds[s] and nxt not in seen and not any(monomial_divides(c, nxt) for c in corners):
                seen.add(nxt)
                stack.append(nxt)
    found.sort(key=lambda e: (sum(e), tuple(reversed(e))))
    return Staircase(nvars, corners, tuple(found))


@dataclass(frozen=True)
class StandardBasis:
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    nvars: int
    certified: bool = False
    steps: int = 0
    input_generators: tuple[Polynomial, ...] = field(default=(), compare=False, repr=False)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.generators]

    def staircase(self) -> Staircase:
        return staircase(self.leading_monomials(), self.nvars)

    def audit(self, budget: int | None = None) -> bool:
        """Recheck that every pairwise S-polynomial reduces to zero."""
        gens = self.generators
        counter = _Counter(budget)
        cap = None
        if self.order.is_local and self.nvars:
            # leading monomials g = m + (higher terms) covering degree d put m^d in I + m^(d+1),
            # so m^d lies in I and reductions may drop every term of degree >= d
            cap = corner_degree(self.leading_monomials(), self.nvars)
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                lcm = monomial_lcm(gens[i].leading_monomial(self.order), gens[j].leading_monomial(self.order))
                if cap is not None and sum(lcm) >= cap:
                    continue
                s = s_polynomial(gens[i], gens[j], self.order)
                if normal_form(s, gens, self.order, _counter=counter, _cap=cap):
                    return False
        return True


def corner_degree(leading: Iterable[Monomial], nvars: int) -> int | None:
    """Smallest ``D`` with every degree-``D`` monomial in the monomial ideal, if any."""
    st = staircase(leading, nvars)
    if not st.is_finite:
        return None
    return 1 + max((sum(m) for m in st.standard_monomials), default=-1)


def _degree_monomials(nvars: int, degree: int) -> list[Monomial]:
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for s in combo:
            e[s] += 1
        out.append(tuple(e))
    return out


def _pick_pair(pairs: list, leads: list) -> tuple[int, int]:
    best_k = 0
    best_key = None
    for k, (i, j) in enumerate(pairs):
        key = sum(monomial_lcm(leads[i], leads[j]))
        if best_key is None or key < best_key:
            best_k, best_key = k, key
    return pairs.pop(best_k)


def _trial_caps(nvars: int) -> list[int]:
    # degrees D for which I + m^D is tried first; stop before the monomial count gets large
    caps = []
    d = 2
    while d <= 64 and math.comb(d - 1 + nvars, nvars) <= _TRIAL_MONOMIALS:
        caps.append(d)
        d *= 2
    return caps


_TRIAL_MONOMIALS = 4000


def standard_basis(generators: Sequence[Polynomial], order: MonomialOrder,
                   budget: int | None = None, nvars: int | None = None) -> StandardBasis:
    """Complete ``generators`` to a standard basis for ``order``.

    The output is deterministic for a fixed input sequence.  Elements are
    normalized to leading coefficient 1 and the result is minimal: no
    leading monomial divides another one.

    For the local order the ideals ``I + m^D`` are completed first for a
    few growing ``D``.  Once their leading ideal contains every monomial of
    some degree ``d < D``, Nakayama gives ``m^d`` inside ``I`` and that basis
    is a standard basis of ``I`` itself.  Only when no trial succeeds is the
    untruncated completion run.
    """
    gens_in = tuple(generators)
    if nvars is None:
        if not gens_in:
            raise ValueError("cannot infer the number of variables of an empty generator list")
        nvars = gens_in[0].nvars
    for g in gens_in:
        if g.nvars != nvars:
            raise ValueError("generators live in different rings")
    counter = _Counter(budget)
    if order.is_local and nvars > 0:
        for trial in _trial_caps(nvars):
            result = _complete(gens_in, order, nvars, counter, trial)
            if result is not None:
                return result
    return _complete(gens_in, order, nvars, counter, None)


def _complete(gens_in: tuple[Polynomial, ...], order: MonomialOrder, nvars: int,
              counter: _Counter, trial: int | None) -> StandardBasis | None:
    basis: list[Polynomial] = []
    seen = set()
    for g in gens_in:
        if g:
            g = g.monic(order)
            if g not in seen:
                seen.add(g)
                basis.append(g)

    leads = [g.leading_monomial(order) for g in basis]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    unit = (0,) * nvars
    cap = None

    def set_cap(d: int) -> None:
        nonlocal cap
        cap = d
        for k, g in enumerate(basis):
            basis[k] = truncate(g, cap)
        # elements whose leading monomial has degree >= cap vanish; the degree-cap monomials stand in
        for m in _degree_monomials(nvars, cap):
            basis.append(Polynomial._raw({m: Fraction(1)}, nvars))
            leads.append(m)

    def update_cap() -> bool:
        if not order.is_local or nvars == 0:
            return False
        d = corner_degree(leads, nvars)
        if d is None or d == 0 or (cap is not None and d >= cap):
            return False
        set_cap(d)
        return True

    def requeue():
        # the truncated elements are new polynomials, so every pair is checked again
        live = [k for k, g in enumerate(basis) if g and sum(leads[k]) < cap]
        pairs[:] = [(i, j) for n, j in enumerate(live) for i in live[:n]]

    if trial is not None:
        set_cap(trial)
    if update_cap() or trial is not None:
        requeue()
    while pairs and unit not in leads:
        i, j = _pick_pair(pairs, leads)
        if not basis[i] or not basis[j]:
            continue
        if not order.is_local and all(a == 0 or b == 0 for a, b in zip(leads[i], leads[j])):
            continue
        if cap is not None and sum(monomial_lcm(leads[i], leads[j])) >= cap:
            # every term of such an S-polynomial has degree >= cap, so it lies in m^cap ⊆ I
            continue
        s = truncate(s_polynomial(basis[i], basis[j], order), cap)
        reducers = [b for b, m in zip(basis, leads) if b and (cap is None or sum(m) < cap)]
        h = normal_form(s, reducers, order, _counter=counter, _cap=cap)
        if h:
            h = h.monic(order)
            basis.append(h)
            leads.append(h.leading_monomial(order))
            n = len(basis) - 1
            pairs.extend((k, n) for k in range(n))
            if update_cap():
                requeue()

    if trial is not None and unit not in leads and cap >= trial:
        return None
    live = [k for k, g in enumerate(basis) if g]
    basis = [basis[k] for k in live]
    leads = [leads[k] for k in live]
    # keep the first element for every minimal leading monomial
    keep = []
    for k, m in enumerate(leads):
        redundant = False
        for t, other in enumerate(leads):
            if t == k:
                continue
            if monomial_divides(other, m) and (other != m or t < k):
                redundant = True
                break
        if not redundant:
            keep.append(basis[k])
    return StandardBasis(tuple(keep), order, nvars, certified=True, steps=counter.steps,
                         input_generators=gens_in)


def colength(basis: StandardBasis) -> int | float:
    """Number of standard monomials, or ``INFINITE``."""
    if not basis.certified:
        raise ValueError("colength needs a certified standard basis")
    if basis.nvars == 0:
        return 0 if basis.generators else 1
    if not basis.generators:
        return INFINITE
    st = basis.staircase()
    return len(st.standard_monomials) if st.is_finite else INFINITE


def local_colength(generators: Sequence[Polynomial], budget: int | None = None,
                   nvars: int | None = None) -> int | float:
    return colength(standard_basis(generators, LOCAL, budget, nvars))


def global_colength(generators: Sequence[Polynomial], budget: int | None = None,
                    nvars: int | None = None) -> int | float:
    """Dimension of ``Q[x]/I``: the total multiplicity over all affine points."""
    return colength(standard_basis(generators, GLOBAL, budget, nvars))
