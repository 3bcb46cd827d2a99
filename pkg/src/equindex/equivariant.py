"""Equivariant data, validation and the determinantal ideal.

An index problem consists of a diagonal representation on ``C^N``,
equivariant equations ``f`` cutting out the complete intersection, and a
profile of pairs ``(alpha, k)`` each carrying ``n_alpha - k + 1``
equivariant 1-forms of character ``alpha``.  Everything downstream happens
on the fixed subspace (the coordinates of trivial weight).

For a diagonal action the Schur-lemma scalar by which ``df`` acts on the
coordinate line of ``x_s`` (weight ``alpha``) at a fixed point is just
``df/dx_s`` evaluated there, and likewise for the ``dx_s`` coefficient of a
form.  So the matrices below are built from partial derivatives and form
coefficients with every nontrivial coordinate set to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .group_rep import Character, DiagonalRepresentation
from .polyring import Polynomial, format_polynomial, maximal_minors, partial_derivative, substitute_zero


@dataclass(frozen=True)
class EquivariantFunction:
    character: Character
    poly: Polynomial


@dataclass(frozen=True)
class EquivariantOneForm:
    """``sum_s coefficients[s] * dx_s`` with values in the line of ``character``."""

    character: Character
    coefficients: tuple[Polynomial, ...]

    def scale(self, c) -> EquivariantOneForm:
        return EquivariantOneForm(self.character, tuple(a.scale(c) for a in self.coefficients))


@dataclass(frozen=True)
class ProfilePair:
    """One ``(alpha, i)`` entry of the k-profile together with its forms."""

    character: Character
    k: int
    forms: tuple[EquivariantOneForm, ...]


@dataclass(frozen=True)
class IndexProblem:
    rep: DiagonalRepresentation
    equations: tuple[EquivariantFunction, ...]
    profile: tuple[ProfilePair, ...]

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(self.equations))
        object.__setattr__(self, "profile", tuple(self.profile))

    def ell(self, alpha: Character) -> int:
        """Number of equations of character ``alpha``."""
        return sum(1 for f in self.equations if f.character == alpha)

    def m(self, alpha: Character) -> int:
        return self.rep.multiplicity(alpha)

    def n(self, alpha: Character) -> int:
        return self.m(alpha) - self.ell(alpha)

    @property
    def n_fixed(self) -> int:
        return self.n(self.rep.trivial())

    def equations_of(self, alpha: Character) -> list[EquivariantFunction]:
        return [f for f in self.equations if f.character == alpha]

    def with_forms(self, forms: Sequence[Sequence[EquivariantOneForm]]) -> IndexProblem:
        """Same problem with the forms of each pair replaced."""
        pairs = tuple(ProfilePair(p.character, p.k, tuple(fs)) for p, fs in zip(self.profile, forms))
        return IndexProblem(self.rep, self.equations, pairs)


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        head = ["VALID" if self.ok else "INVALID"]
        return head + [f"violation: {v}" for v in self.violations] + [f"note: {n}" for n in self.notes]


class InvalidProblem(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__("; ".join(report.violations))
        self.report = report


def _monomial_str(m, names) -> str:
    return format_polynomial(Polynomial.monomial(m), names)


def validate(problem: IndexProblem) -> ValidationReport:
    rep = problem.rep
    names = rep.names
    N = rep.dimension
    report = ValidationReport()
    v = report.violations

    for t, f in enumerate(problem.equations):
        label = f"equation {t + 1}"
        if f.character.orders != rep.group.orders:
            v.append(f"{label}: character {f.character} does not belong to the group")
            continue
        if f.poly.nvars != N:
            v.append(f"{label}: polynomial has {f.poly.nvars} variables, expected {N}")
            continue
        if f.poly.is_zero():
            v.append(f"{label}: equation is identically zero")
        for m in f.poly.terms:
            chi = rep.char_of_monomial(m)
            if chi != f.character:
                v.append(f"{label}: monomial {_monomial_str(m, names)} has character {chi}, "
                         f"declared {f.character}")
        if not f.character.is_trivial and substitute_zero(f.poly, rep.nontrivial_coordinates()):
            v.append(f"{label}: nontrivial-character equation does not vanish on the fixed block")

    chars = {f.character for f in problem.equations} | {p.character for p in problem.profile}
    total_ell = 0
    for alpha in sorted(chars, key=lambda c: c.exponents):
        if alpha.orders != rep.group.orders:
            continue
        ell, m = problem.ell(alpha), problem.m(alpha)
        total_ell += ell
        if ell > m:
            v.append(f"character {alpha}: {ell} equations but multiplicity only {m}")
    if total_ell > N:
        v.append(f"{total_ell} equations exceed the ambient dimension {N}")

    trivial = rep.trivial()
    n_fixed = problem.n_fixed
    total_k = 0
    for t, pair in enumerate(problem.profile):
        label = f"pair {t + 1} (character {pair.character}, k={pair.k})"
        if pair.character.orders != rep.group.orders:
            v.append(f"{label}: character does not belong to the group")
            continue
        n_alpha = problem.n(pair.character)
        total_k += pair.k
        if pair.k < 1:
            v.append(f"{label}: k must be positive")
        elif pair.k > n_alpha:
            v.append(f"{label}: k exceeds n = {n_alpha}")
        want = n_alpha - pair.k + 1
        if want >= 1 and len(pair.forms) != want:
            v.append(f"{label}: needs {want} forms, got {len(pair.forms)}")
        for j, w in enumerate(pair.forms):
            flabel = f"{label} form {j + 1}"
            if w.character != pair.character:
                v.append(f"{flabel}: character {w.character} differs from the pair's")
            if len(w.coefficients) != N:
                v.append(f"{flabel}: has {len(w.coefficients)} coefficients, expected {N}")
                continue
            for s, a in enumerate(w.coefficients):
                if a.nvars != N:
                    v.append(f"{flabel}: coefficient of d{names[s]} has {a.nvars} variables")
                    continue
                for mono in a.terms:
                    chi = rep.char_of_monomial(mono) + rep.weights[s]
                    if chi != pair.character:
                        v.append(f"{flabel}: term {_monomial_str(mono, names)} d{names[s]} has character "
                                 f"{chi}, declared {pair.character}")
    if total_k != n_fixed:
        v.append(f"sum of k is {total_k}, but n of the trivial character is {n_fixed}")
    if not rep.multiplicity(trivial):
        report.notes.append("the fixed block is empty")

    paired = {p.character for p in problem.profile}
    for f in problem.equations:
        if not f.character.is_trivial and f.character not in paired:
            report.notes.append(f"equations of character {f.character} have no profile pair "
                                "and do not enter the ideal")
    return report


def require_valid(problem: IndexProblem) -> None:
    report = validate(problem)
    if not report.ok:
        raise InvalidProblem(report)


def schur_matrix(problem: IndexProblem, pair_index: int, *, check: bool = True) -> list[list[Polynomial]]:
    """The ``m_alpha x (m_alpha - k + 1)`` matrix of the given pair.

    Rows follow the weight-``alpha`` coordinates in declaration order.  The
    first ``ell_alpha`` columns hold partials of the equations of character
    ``alpha``, the remaining ones the coefficients of the pair's forms, all
    restricted to the fixed subspace.
    """
    if check:
        require_valid(problem)
    rep = problem.rep
    pair = problem.profile[pair_index]
    rows = rep.block(pair.character)
    drop = rep.nontrivial_coordinates()
    columns = [[substitute_zero(partial_derivative(f.poly, s), drop) for s in rows]
               for f in problem.equations_of(pair.character)]
    columns += [[substitute_zero(w.coefficients[s], drop) for s in rows] for w in pair.forms]
    return [[col[r] for col in columns] for r in range(len(rows))]


def restricted_equations(problem: IndexProblem) -> list[Polynomial]:
    drop = problem.rep.nontrivial_coordinates()
    return [substitute_zero(f.poly, drop) for f in problem.equations_of(problem.rep.trivial())]


def assemble_ideal(problem: IndexProblem, *, check: bool = True) -> list[Polynomial]:
    """Generators, in the fixed variables, of the ideal whose colength is the index.

    Restricted trivial-character equations come first, then the maximal
    minors of each pair's matrix.  Zero and repeated generators are dropped.
    """
    if check:
        require_valid(problem)
    gens = restricted_equations(problem)
    for t in range(len(problem.profile)):
        gens += maximal_minors(schur_matrix(problem, t, check=False))
    out, seen = [], set()
    for g in gens:
        if g and g not in seen:
            seen.add(g)
            out.append(g)
    return out


def fixed_names(problem: IndexProblem) -> list[str]:
    rep = problem.rep
    return [rep.names[s] for s in rep.fixed_block()]
