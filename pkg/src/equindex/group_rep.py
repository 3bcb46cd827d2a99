"""Finite abelian groups, their characters and diagonal representations.

A finite abelian group is stored as a product of cyclic groups
``Z/d_1 x ... x Z/d_r``.  A character sends the j-th generator to
``exp(2*pi*i*c_j/d_j)``; only the exponent vector ``(c_1, ..., c_r)`` is kept,
so roots of unity never have to be materialized.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class AbelianGroup:
    orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(int(d) for d in self.orders)
        for d in orders:
            if d < 2:
                raise ValueError(f"cyclic factor order must be >= 2, got {d}")
        object.__setattr__(self, "orders", orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def cardinality(self) -> int:
        return math.prod(self.orders)

    def character(self, exponents: Sequence[int] = ()) -> Character:
        """Character with the given exponents; the empty sequence means trivial."""
        if not exponents:
            exponents = (0,) * self.rank
        return Character(self.orders, tuple(exponents))

    def trivial(self) -> Character:
        return Character(self.orders, (0,) * self.rank)

    def characters(self) -> list[Character]:
        """All characters, in lexicographic order of exponents."""
        return [Character(self.orders, c) for c in itertools.product(*(range(d) for d in self.orders))]


@dataclass(frozen=True)
class Character:
    orders: tuple[int, ...]
    exponents: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(self.orders)
        exponents = tuple(self.exponents)
        if len(orders) != len(exponents):
            raise ValueError(
                f"character has {len(exponents)} exponents but the group has {len(orders)} factors"
            )
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "exponents", tuple(int(c) % d for c, d in zip(exponents, orders)))

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def __add__(self, other: Character) -> Character:
        return char_add(self, other)

    def __neg__(self) -> Character:
        return Character(self.orders, tuple(-c for c in self.exponents))

    def __sub__(self, other: Character) -> Character:
        return char_add(self, -other)

    def scale(self, n: int) -> Character:
        return Character(self.orders, tuple(n * c for c in self.exponents))

    def __str__(self):
        return "(" + ",".join(map(str, self.exponents)) + ")"


def char_add(a: Character, b: Character) -> Character:
    if a.orders != b.orders:
        raise ValueError(f"characters of different groups: {a.orders} vs {b.orders}")
    return Character(a.orders, tuple(x + y for x, y in zip(a.exponents, b.exponents)))


@dataclass(frozen=True)
class DiagonalRepresentation:
    """The group acting on ``C^N`` by one character per coordinate.

    ``names`` are the coordinate identifiers used by the polynomial parser.
    Polynomials over this representation always use the declaration order
    of the coordinates; block ordering only matters for matrix rows.
    """

    group: AbelianGroup
    weights: tuple[Character, ...]
    names: tuple[str, ...]

    def __post_init__(self):
        weights = tuple(self.weights)
        names = tuple(self.names)
        if not weights:
            raise ValueError("a representation needs at least one coordinate")
        if len(weights) != len(names):
            raise ValueError("one weight per coordinate name is required")
        if len(set(names)) != len(names):
            raise ValueError(f"coordinate names must be distinct: {names}")
        for w in weights:
            if w.orders != self.group.orders:
                raise ValueError(f"weight {w} does not belong to the group {self.group.orders}")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "names", names)

    @classmethod
    def from_exponents(cls, orders: Sequence[int], weights: Sequence[Sequence[int]],
                       names: Sequence[str] | None = None) -> DiagonalRepresentation:
        group = AbelianGroup(tuple(orders))
        if names is None:
            names = [f"x{i + 1}" for i in range(len(weights))]
        return cls(group, tuple(group.character(w) for w in weights), tuple(names))

    @property
    def dimension(self) -> int:
        return len(self.weights)

    def trivial(self) -> Character:
        return self.group.trivial()

    def char_of_monomial(self, exponents: Sequence[int]) -> Character:
        return char_of_monomial(self, exponents)

    def block(self, alpha: Character) -> list[int]:
        """Coordinates of weight ``alpha``, in declaration order."""
        return [s for s, w in enumerate(self.weights) if w == alpha]

    def multiplicity(self, alpha: Character) -> int:
        return sum(1 for w in self.weights if w == alpha)

    def fixed_block(self) -> list[int]:
        return fixed_block(self)

    def nontrivial_coordinates(self) -> list[int]:
        return [s for s, w in enumerate(self.weights) if not w.is_trivial]

    def block_characters(self) -> list[Character]:
        """Characters that occur as weights: trivial first, then by exponent vector."""
        present = set(self.weights)
        present.discard(self.trivial())
        ordered = sorted(present, key=lambda c: c.exponents)
        if self.multiplicity(self.trivial()):
            ordered.insert(0, self.trivial())
        return ordered

    def canonical_order(self) -> list[int]:
        return [s for alpha in self.block_characters() for s in self.block(alpha)]


def char_of_monomial(rep: DiagonalRepresentation, exponents: Sequence[int]) -> Character:
    if len(exponents) != rep.dimension:
        raise ValueError(f"monomial has {len(exponents)} exponents, representation has {rep.dimension}")
    orders = rep.group.orders
    total = [0] * len(orders)
    for e, w in zip(exponents, rep.weights):
        if e:
            for j, c in enumerate(w.exponents):
                total[j] += e * c
    return Character(orders, tuple(total))


def fixed_block(rep: DiagonalRepresentation) -> list[int]:
    return [s for s, w in enumerate(rep.weights) if w.is_trivial]
