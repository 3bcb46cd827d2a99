import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equindex import corpus
from equindex.document import problem_from_dict
from equindex.indices import (
    GenericityFailure,
    NonIsolatedError,
    chern_obstruction,
    generic_index,
    gsv_index,
    sample_generic_linear,
    smooth_index,
)
from equindex.local_algebra import BudgetExceeded
from problem_factory import random_problem


@pytest.mark.parametrize("name, expected", [
    ("smooth_x_dx", 1),
    ("smooth_x3_dx", 3),
    ("a1_dx", 2),
    ("a1_xdx_minus_ydy", 4),
    ("z2_sign_x_dz", 2),
    ("z2_trivial_xdx_minus_ydy", 4),
    ("z2_smooth_x_dy", 1),
])
def test_gsv_index_examples(name, expected):
    report = gsv_index(corpus.problem(name), oracle=True)
    assert report.value == expected
    assert report.value == report.standard_monomials
    assert report.oracle.status == "AGREE"


def test_smooth_index_matches_gsv_without_equations():
    for name in ("smooth_x_dx", "smooth_x5_dx", "z2_smooth_x_dy", "escape"):
        problem = corpus.problem(name)
        assert not problem.equations
        assert smooth_index(problem.rep, problem.profile).value == gsv_index(problem).value


def test_non_degenerate_point_has_index_one():
    report = gsv_index(corpus.problem("smooth_x_dx"))
    assert report.value == 1
    assert report.leading_exponents == ((1,),)


def test_df_is_non_isolated():
    with pytest.raises(NonIsolatedError):
        gsv_index(corpus.problem("df"))


def test_sample_sign_pair_is_single_dz():
    problem = corpus.problem("z2_sign_x_dz")
    sample = sample_generic_linear(problem.rep, problem.equations, problem.profile, seed=3)
    (form,), = sample.forms
    x, y, z = form.coefficients
    assert x.is_zero() and y.is_zero()
    assert z.is_constant() and z.constant_term() != 0


def test_sample_shape_trivial_pair():
    doc = {"group": {"orders": []}, "variables": [{"name": "x", "weight": []}, {"name": "y", "weight": []}],
           "equations": [], "profile": [{"character": [], "k": 1, "forms": [{"x": "x"}, {"y": "y"}]}]}
    problem = problem_from_dict(doc)
    sample = sample_generic_linear(problem.rep, problem.equations, problem.profile, seed=0, bound=5)
    assert len(sample.forms[0]) == 2
    for form in sample.forms[0]:
        assert all(c.is_constant() for c in form.coefficients)
        assert all(-5 <= c.constant_term() <= 5 for c in form.coefficients)
        assert any(not c.is_zero() for c in form.coefficients)


def test_sample_is_deterministic():
    problem = corpus.problem("a1_surface_k1k1")
    a = sample_generic_linear(problem.rep, problem.equations, problem.profile, seed=42)
    b = sample_generic_linear(problem.rep, problem.equations, problem.profile, seed=42)
    assert a == b


@given(st.integers(0, 10**6), st.integers(0, 1000))
@settings(max_examples=40, deadline=None)
def test_samples_are_equivariant_and_bounded(problem_seed, seed):
    problem = random_problem(random.Random(problem_seed))
    sample = sample_generic_linear(problem.rep, problem.equations, problem.profile, seed, bound=7)
    rep = problem.rep
    for pair, forms in zip(problem.profile, sample.forms):
        assert len(forms) == len(pair.forms)
        for form in forms:
            assert form.character == pair.character
            for s, c in enumerate(form.coefficients):
                assert c.is_zero() or (c.is_constant() and rep.weights[s] == pair.character)
                assert abs(c.constant_term()) <= 7


@pytest.mark.parametrize("name, expected", [
    ("a1_xdx_minus_ydy", 2),
    ("a1_dx", 0),
    ("cusp_dx", 0),
    ("smooth_x3_dx", 3),
    ("z2_sign_x_dz", 2),
])
def test_chern_examples(name, expected):
    assert chern_obstruction(corpus.problem(name), seed=0).value == expected


@pytest.mark.parametrize("name", [*corpus.CORPUS, "escape"])
def test_chern_is_seed_stable(name):
    problem = corpus.problem(name)
    values = {chern_obstruction(problem, seed=s).value for s in range(0, 10, 2)}
    assert len(values) == 1


def test_chern_of_smooth_germ_equals_index():
    for name in ("smooth_x_dx", "smooth_x2_dx", "smooth_x5_dx", "z2_smooth_x_dy", "escape"):
        problem = corpus.problem(name)
        assert chern_obstruction(problem, seed=5).value == gsv_index(problem).value


@pytest.mark.parametrize("name", list(corpus.CORPUS))
def test_chern_of_a_generic_collection_is_zero(name):
    problem = corpus.problem(name)
    sample = sample_generic_linear(problem.rep, problem.equations, problem.profile, seed=99)
    generic = problem.with_forms(sample.forms)
    assert chern_obstruction(generic, seed=0).value == 0


def test_genericity_failure_when_every_sample_is_degenerate():
    # the double line x^2 = 0 is not reduced; every linear form leaves the ideal (x)
    doc = {"group": {"orders": []}, "variables": [{"name": "x", "weight": []}, {"name": "y", "weight": []}],
           "equations": [{"character": [], "poly": "x^2"}],
           "profile": [{"character": [], "k": 1, "forms": [{"y": "1"}]}]}
    with pytest.raises(GenericityFailure):
        generic_index(problem_from_dict(doc), seed=0, resamples=3)


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_index_is_non_negative(seed):
    problem = random_problem(random.Random(seed), max_n=3)
    try:
        report = gsv_index(problem, budget=2000)
    except (NonIsolatedError, BudgetExceeded):
        return
    assert report.value >= 0
    assert report.value == report.standard_monomials
