import pytest

from equindex import corpus
from equindex.document import problem_from_dict
from equindex.equivariant import assemble_ideal, fixed_names
from equindex.oracle import NOT_STABILIZED, compare, cross_check, macaulay_colength, truncated_quotient_dimension
from equindex.polyring import parse
from problem_factory import agreement_survey

XY = ["x", "y"]


def gens(*texts, names=XY):
    return [parse(t, names) for t in texts]


def test_maximal_ideal():
    assert truncated_quotient_dimension(gens("x", "y"), 2, 2) == 1
    assert macaulay_colength(gens("x", "y")) == 1


def test_a1_ideal_stabilizes_at_four():
    g = gens("x^2 + y^2", "x*y")
    assert macaulay_colength(g) == 4
    assert [truncated_quotient_dimension(g, 2, d) for d in (2, 3, 4, 5)] == [3, 4, 4, 4]


@pytest.mark.parametrize("bound", [4, 8, 12])
def test_line_never_stabilizes(bound):
    assert macaulay_colength(gens("x"), bound) is NOT_STABILIZED


def test_local_count_ignores_far_points():
    assert macaulay_colength(gens("x^2 - x^3", names=["x"])) == 2


@pytest.mark.parametrize("name", list(corpus.CORPUS))
def test_quotient_dimension_flat_after_stabilization(name):
    problem = corpus.problem(name)
    g, n = assemble_ideal(problem), len(fixed_names(problem))
    if n == 0:
        pytest.skip("no fixed coordinates")
    dims = [truncated_quotient_dimension(g, n, d) for d in range(2, 10)]
    first = next(i for i in range(len(dims) - 1) if dims[i] == dims[i + 1])
    assert all(d == dims[first] for d in dims[first:])
    assert all(a <= b for a, b in zip(dims[:first], dims[1:first + 1]))


def test_cross_check_examples():
    assert str(cross_check(corpus.problem("a1_xdx_minus_ydy"))) == "AGREE(4)"
    assert str(cross_check(corpus.problem("smooth_x_dx"))) == "AGREE(1)"


def test_zero_forms_are_inconclusive_on_both_sides():
    doc = corpus.document("a1_dx")
    doc["profile"][0]["forms"] = [{}]
    check = cross_check(problem_from_dict(doc))
    assert check.verdict == "ORACLE_INCONCLUSIVE"
    assert check.index is None


def test_compare_reports_disagreement():
    assert str(compare(3, 4)) == "DISAGREE(3,4)"
    assert compare(float("inf"), 2).verdict == "DISAGREE"


def test_random_problems_agree():
    finite, failures, _ = agreement_survey(seed=11, wanted=8)
    assert not failures
    assert all(check.verdict == "AGREE" for _, check in finite)
