import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equindex.polyring import (
    GLOBAL,
    LOCAL,
    ParseError,
    Polynomial,
    UnknownVariableError,
    determinant,
    format_polynomial,
    maximal_minors,
    parse,
    partial_derivative,
    substitute_zero,
)

XY = ["x", "y"]
XYZ = ["x", "y", "z"]


def P(text, names=XY):
    return parse(text, names)


def test_parse_examples():
    assert P("x^2+y^2") == Polynomial({(2, 0): 1, (0, 2): 1}, 2)
    p = P("-3/2*x*y + y^3")
    assert p.terms == {(1, 1): Fraction(-3, 2), (0, 3): 1}
    assert format_polynomial(p, XY) == "y^3 - 3/2*x*y"
    assert P("x^2 - x^2").is_zero()
    assert P("(x + y)^2") == P("x^2 + 2*x*y + y^2")
    assert P("2/4*x") == P("1/2*x")


@pytest.mark.parametrize("text, position", [
    ("2x", 1),
    ("x^", 2),
    ("x+", 2),
    ("(x", 2),
    ("x^-1", 2),
    ("x**2", 2),
    ("", 0),
    ("1/0", 0),
])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as info:
        parse(text, XY)
    assert info.value.position == position


def test_unknown_variable():
    with pytest.raises(UnknownVariableError):
        parse("x + q", XY)


def test_partial_derivative_examples():
    assert partial_derivative(P("x^2+y^2"), 0) == P("2*x")
    assert partial_derivative(P("x*y^3"), 1) == P("3*x*y^2")
    assert partial_derivative(P("7"), 0).is_zero()


def test_substitute_zero_examples():
    assert substitute_zero(P("x^2+y^2+z^2", XYZ), [2]) == P("x^2+y^2")
    assert substitute_zero(P("x*z+z^3", XYZ), [2]).is_zero()
    assert substitute_zero(P("x"), [1]) == parse("x", ["x"])


def test_determinant_examples():
    x, y = P("x"), P("y")
    one, zero = Polynomial.constant(1, 2), Polynomial.zero(2)
    assert determinant([[2 * x, x], [2 * y, -y]]) == P("-4*x*y")
    assert determinant([[one, zero], [zero, one]]) == one
    assert determinant([[2 * x, one], [2 * y, zero]]) == P("-2*y")


def test_maximal_minors_of_tall_matrix():
    x, y, z = (parse(v, XYZ) for v in XYZ)
    one = Polynomial.constant(1, 3)
    minors = maximal_minors([[x, one], [y, one], [z, one]])
    assert minors == [x - y, x - z, y - z]


def test_orders_on_small_monomials():
    assert GLOBAL.compare((2, 0), (0, 1)) > 0
    assert LOCAL.compare((2, 0), (0, 1)) < 0
    # reverse lexicographic tie break: x*y > y^2 hence x^2 > x*y
    assert GLOBAL.compare((1, 1), (0, 2)) > 0
    assert LOCAL.compare((0, 0), (1, 0)) > 0
    assert P("x^2 + y^3").leading_monomial(GLOBAL) == (0, 3)
    assert P("x^2 + y^3").leading_monomial(LOCAL) == (2, 0)


# randomized corpus

def polys(nvars=3, max_terms=5, max_exp=3):
    mono = st.tuples(*[st.integers(0, max_exp)] * nvars)
    coeff = st.fractions(min_value=-9, max_value=9, max_denominator=5)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(lambda d: Polynomial(d, nvars))


@given(polys(), polys(), polys())
@settings(max_examples=80)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial.zero(3)
    assert all(v != 0 for v in (a * b).terms.values())


@given(polys(), st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=3, max_size=3))
@settings(max_examples=50)
def test_evaluation_is_a_homomorphism(a, point):
    b = a + Polynomial.constant(1, 3)
    assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)


mono3 = st.tuples(*[st.integers(0, 4)] * 3)


@pytest.mark.parametrize("order", [GLOBAL, LOCAL])
@given(m1=mono3, m2=mono3, m=mono3)
@settings(max_examples=100)
def test_orders_total_and_multiplicative(order, m1, m2, m):
    c = order.compare(m1, m2)
    assert (c == 0) == (m1 == m2)
    assert order.compare(m2, m1) == -c
    shifted = lambda e: tuple(a + b for a, b in zip(e, m))
    assert order.compare(shifted(m1), shifted(m2)) == c


def test_one_is_extreme():
    one = (0, 0, 0)
    for e in itertools.product(range(3), repeat=3):
        if e != one:
            assert GLOBAL.compare(one, e) < 0
            assert LOCAL.compare(one, e) > 0


@given(polys())
@settings(max_examples=100)
def test_parse_print_round_trip(p):
    assert parse(format_polynomial(p, XYZ), XYZ) == p


def _permutation_determinant(matrix):
    n = len(matrix)
    total = Polynomial.zero(matrix[0][0].nvars)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Polynomial.constant(-1 if inversions % 2 else 1, total.nvars)
        for r, col in enumerate(perm):
            term = term * matrix[r][col]
        total = total + term
    return total


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_determinant_matches_permutation_expansion(size):
    rng = random.Random(size)
    atoms = [P("x"), P("y"), P("x*y"), Polynomial.constant(1, 2), Polynomial.zero(2)]
    for _ in range(15):
        matrix = [[atoms[rng.randrange(len(atoms))].scale(rng.randint(-3, 3)) + rng.randint(-2, 2)
                   for _ in range(size)] for _ in range(size)]
        assert determinant(matrix) == _permutation_determinant(matrix)
