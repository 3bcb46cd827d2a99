"""Conservation of number under deformation.

The local index at the origin is compared with the global colength of the
deformed ideal, which totals the multiplicities of all affine solutions.
When no solution moves to or from infinity the two agree.  The comparison
is only one-sided evidence: a mismatch can mean that points escaped, or
that the undeformed ideal already had solutions away from the origin, or,
for more generators than variables, that a constant shift is not flat.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .equivariant import EquivariantOneForm, IndexProblem, assemble_ideal, fixed_names
from .indices import DEFAULT_BOUND, NonIsolatedError, sample_generic_linear
from .local_algebra import INFINITE, global_colength, local_colength
from .polyring import Polynomial, format_polynomial

CONSTANT_SHIFT = "CONSTANT_SHIFT"
USER = "USER"

CONSERVED = "CONSERVED"
ESCAPED = "ESCAPED"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class DeformationSpec:
    epsilon: Fraction
    mode: str = CONSTANT_SHIFT
    seed: int = 0
    bound: int = DEFAULT_BOUND
    generators: tuple[Polynomial, ...] = ()  # replacement generators in USER mode

    def __post_init__(self):
        eps = Fraction(self.epsilon)
        if not eps:
            raise ValueError("epsilon must be nonzero")
        if self.mode not in (CONSTANT_SHIFT, USER):
            raise ValueError(f"unknown deformation mode {self.mode!r}")
        object.__setattr__(self, "epsilon", eps)


def shift_constants(count: int, seed: int, bound: int = DEFAULT_BOUND) -> list[int]:
    """Nonzero integers in ``[-bound, bound]`` from a seeded stream."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        c = rng.randint(-bound, bound)
        if c:
            out.append(c)
    return out


def deform(generators: Sequence[Polynomial], spec: DeformationSpec) -> list[Polynomial]:
    if spec.mode == USER:
        return list(spec.generators)
    shifts = shift_constants(len(generators), spec.seed, spec.bound)
    return [g - spec.epsilon * c for g, c in zip(generators, shifts)]


@dataclass(frozen=True)
class ConservationReport:
    local: int
    global_deformed: int
    global_undeformed: int | float
    verdict: str
    deformed: tuple[str, ...]

    def lines(self) -> list[str]:
        out = [f"LOCAL {self.local}  GLOBAL_DEFORMED {self.global_deformed}", self.verdict]
        if self.verdict == ESCAPED:
            out.append("note: solutions moved to or from infinity under this deformation; "
                       "the local index itself is unaffected")
        elif self.verdict == INCONCLUSIVE:
            out.append("note: either the undeformed ideal has solutions away from the origin "
                       "or the shift is not flat (more generators than variables)")
        return out

    def to_dict(self) -> dict:
        undeformed = self.global_undeformed
        return {
            "local": self.local,
            "global_deformed": self.global_deformed,
            "global_undeformed": None if undeformed == INFINITE else undeformed,
            "verdict": self.verdict,
            "deformed_generators": list(self.deformed),
        }


def conserve_ideal(generators: Sequence[Polynomial], nvars: int, spec: DeformationSpec,
                   names: Sequence[str] | None = None, budget: int | None = None) -> ConservationReport:
    local = local_colength(generators, budget, nvars=nvars)
    if local == INFINITE:
        raise NonIsolatedError("the undeformed ideal has infinite local colength")
    deformed = deform(generators, spec)
    total = global_colength(deformed, budget, nvars=nvars)
    if total == INFINITE:
        raise NonIsolatedError("the deformed ideal has infinite global colength")
    undeformed = global_colength(generators, budget, nvars=nvars)
    if total == local:
        verdict = CONSERVED
    elif undeformed == local and len(generators) <= nvars:
        verdict = ESCAPED
    else:
        verdict = INCONCLUSIVE
    return ConservationReport(int(local), int(total), undeformed, verdict,
                              tuple(format_polynomial(g, names) for g in deformed))


def form_shift_generators(problem: IndexProblem, epsilon, seed: int = 0,
                          bound: int = DEFAULT_BOUND) -> list[Polynomial]:
    """Ideal generators for the collection ``omega + epsilon * lambda``.

    ``lambda`` is a generic linear collection from the stream ``seed``.  This
    deforms the forms rather than the ideal, so the determinantal structure
    is kept; use the result with a ``USER`` deformation.
    """
    eps = Fraction(epsilon)
    sample = sample_generic_linear(problem.rep, problem.equations, problem.profile, seed, bound)
    forms = []
    for pair, generic in zip(problem.profile, sample.forms):
        forms.append([EquivariantOneForm(w.character, tuple(a + g.scale(eps) for a, g in
                                                            zip(w.coefficients, lam.coefficients)))
                      for w, lam in zip(pair.forms, generic)])
    return assemble_ideal(problem.with_forms(forms))


def conserve(problem: IndexProblem, epsilon, seed: int = 0, *, bound: int = DEFAULT_BOUND,
             budget: int | None = None) -> ConservationReport:
    """Shift every generator of the index ideal by ``epsilon`` times a seeded constant."""
    gens = assemble_ideal(problem)
    names = fixed_names(problem)
    spec = DeformationSpec(Fraction(epsilon), CONSTANT_SHIFT, seed, bound)
    return conserve_ideal(gens, len(names), spec, names, budget)
