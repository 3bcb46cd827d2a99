import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equindex.group_rep import AbelianGroup, Character, DiagonalRepresentation, char_add, char_of_monomial, fixed_block
from equindex.polyring import Polynomial


def test_group_cardinality_and_characters():
    g = AbelianGroup((2, 4))
    assert g.cardinality == 8
    assert len(g.characters()) == 8
    assert AbelianGroup(()).cardinality == 1
    with pytest.raises(ValueError):
        AbelianGroup((1,))


@pytest.mark.parametrize("orders, a, b, expected", [
    ((2,), (1,), (1,), (0,)),
    ((3,), (1,), (2,), (0,)),
    ((2, 4), (1, 3), (0, 2), (1, 1)),
])
def test_char_add(orders, a, b, expected):
    assert char_add(Character(orders, a), Character(orders, b)) == Character(orders, expected)


def test_char_add_rejects_mixed_groups():
    with pytest.raises(ValueError):
        char_add(Character((2,), (1,)), Character((3,), (1,)))


def test_character_reduced_mod_orders():
    c = Character((3,), (7,))
    assert c.exponents == (1,)
    assert (-c).exponents == (2,)
    assert Character((3,), (0,)).is_trivial


def test_char_of_monomial_examples():
    z2 = DiagonalRepresentation.from_exponents((2,), [[0], [1]], ["x", "y"])
    assert char_of_monomial(z2, (0, 3)).exponents == (1,)
    assert char_of_monomial(z2, (1, 2)).exponents == (0,)
    z3 = DiagonalRepresentation.from_exponents((3,), [[1], [2]], ["x", "y"])
    assert char_of_monomial(z3, (2, 2)).exponents == (0,)


def test_fixed_block_examples():
    assert fixed_block(DiagonalRepresentation.from_exponents((), [[], []])) == [0, 1]
    assert fixed_block(DiagonalRepresentation.from_exponents((2,), [[0], [1]])) == [0]
    assert fixed_block(DiagonalRepresentation.from_exponents((2,), [[1], [1]])) == []


def test_canonical_order_puts_fixed_block_first():
    rep = DiagonalRepresentation.from_exponents((3,), [[2], [0], [1], [0]], ["a", "b", "c", "d"])
    assert rep.canonical_order() == [1, 3, 2, 0]
    assert [str(c) for c in rep.block_characters()] == ["(0)", "(1)", "(2)"]


def test_names_must_be_distinct():
    with pytest.raises(ValueError):
        DiagonalRepresentation.from_exponents((), [[], []], ["x", "x"])


orders_st = st.lists(st.integers(2, 5), min_size=0, max_size=2).map(tuple)


@st.composite
def rep_and_monomials(draw):
    orders = draw(orders_st)
    n = draw(st.integers(1, 4))
    weights = [[draw(st.integers(0, d - 1)) for d in orders] for _ in range(n)]
    rep = DiagonalRepresentation.from_exponents(orders, weights)
    mono = st.lists(st.integers(0, 6), min_size=n, max_size=n).map(tuple)
    return rep, draw(mono), draw(mono)


@given(rep_and_monomials())
def test_char_of_monomial_is_additive(data):
    rep, m1, m2 = data
    product = tuple(a + b for a, b in zip(m1, m2))
    assert char_of_monomial(rep, product) == char_of_monomial(rep, m1) + char_of_monomial(rep, m2)


@given(rep_and_monomials())
@settings(max_examples=60)
def test_fixed_block_matches_multiplicity(data):
    rep = data[0]
    fixed = fixed_block(rep)
    assert len(fixed) == rep.multiplicity(rep.trivial())
    assert sorted(fixed + rep.nontrivial_coordinates()) == list(range(rep.dimension))
    assert sum(rep.multiplicity(a) for a in rep.block_characters()) == rep.dimension


def _act_symbolically(rep, generator, m):
    """Apply the generator to the monomial with a formal root of unity z, z^d = 1.

    The monomial lives in the first N variables; the last variable is z.
    Coordinate s is replaced by z^(w_s * d / d_generator) * x_s, and powers of z
    are reduced mod z^d - 1 with d the group exponent.
    """
    orders = rep.group.orders
    d = math.lcm(*orders)
    n = rep.dimension
    result = Polynomial.constant(1, n + 1)
    for s, e in enumerate(m):
        shift = rep.weights[s].exponents[generator] * (d // orders[generator])
        image = Polynomial.monomial(tuple(1 if t == s else 0 for t in range(n)) + (shift,))
        result = result * image ** e
    reduced = {}
    for mono, c in result.terms.items():
        key = mono[:n] + (mono[n] % d,)
        reduced[key] = reduced.get(key, 0) + c
    return Polynomial(reduced, n + 1), d


@given(rep_and_monomials())
@settings(max_examples=60)
def test_symbolic_action_matches_congruence(data):
    rep, m, _ = data
    chi = char_of_monomial(rep, m)
    for generator, order in enumerate(rep.group.orders):
        acted, d = _act_symbolically(rep, generator, m)
        expected_power = chi.exponents[generator] * (d // order)
        assert acted == Polynomial.monomial(tuple(m) + (expected_power,))


def test_all_characters_enumerated_once():
    g = AbelianGroup((2, 3))
    seen = {c.exponents for c in g.characters()}
    assert seen == set(itertools.product(range(2), range(3)))
