from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from growth_forge.algebra import Frame, MonomialAlgebra
from growth_forge.errors import BudgetExceeded, InvalidArgument
from growth_forge.config import Budget
from growth_forge.fields import PrimeField
from growth_forge.growth import bergman_bound_check, dim_series, dim_Vn, gk_estimate, growth_report
from growth_forge.words import RunSequenceSpec, factor_complexity, is_factor

import oracles

GEO2 = RunSequenceSpec.geometric(2)
A = MonomialAlgebra.for_spec(GEO2)
V = A.standard_frame()


def test_multiply_examples():
    assert A.x * A.y == A.monomial("xy")
    assert not (A.x * A.x)
    assert (A.x + A.y) * A.x == A.monomial("yx")
    assert str((A.x + A.y) * A.x) == "y*x"


def test_format_and_parse():
    e = A.parse("3*x*y^2 + y")
    assert str(e) == "y + 3*x*y^2"
    assert A.parse(str(e)) == e
    assert str(A.parse("1/2*y - 2")) == "-2 + 1/2*y"
    with pytest.raises(InvalidArgument):
        A.monomial("xz")


words = st.text(alphabet="xy", max_size=6)
elements = st.dictionaries(words, st.integers(-4, 4).filter(bool), max_size=3)


@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    a, b, c = A.element(a), A.element(b), A.element(c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a * A.one == a == A.one * a
    assert a - a == A.zero


@given(elements)
def test_terms_are_factors(a):
    e = A.element(a)
    assert all(w == "" or is_factor(w, GEO2) for w in e.terms)
    assert all(c != 0 for c in e.terms.values())


def test_dim_examples():
    assert dim_Vn(0, V) == 1
    assert dim_Vn(1, V) == 3
    assert dim_Vn(2, V) == 6


def test_default_frame_identity():
    dims = dim_series(80, V)
    total = 1
    for n in range(1, 81):
        total += factor_complexity(n, GEO2)
        assert dims[n] == total


def test_general_frame_against_naive_oracle():
    # non-monomial frame goes through exact row reduction
    frame = Frame([A.one, A.x + A.y, A.x - A.parse("2*y")])
    polys = [e.terms for e in frame.elements]
    alive = A.alive
    assert dim_series(6, frame) == oracles.frame_dims(polys, 6, alive)
    f2 = MonomialAlgebra.for_spec(GEO2, PrimeField(2))
    frame2 = Frame([f2.one, f2.x + f2.y])
    assert dim_series(5, frame2)[:3] == [1, 2, 3]


def test_growth_report_quadratic():
    rep = growth_report(200, V)
    assert rep.verdict() == "quadratic"
    assert 0 < rep.c1 <= rep.c2
    assert rep.window == (100, 200)
    assert Fraction(18, 10) <= gk_estimate(rep, (100, 200)) <= Fraction(22, 10)
    dims = rep.dims()
    assert all(a <= b for a, b in zip(dims, dims[1:]))


def test_trivial_frame_not_quadratic():
    rep = growth_report(10, Frame([A.one]))
    assert rep.dims() == [1] * 11
    assert rep.verdict() == "not quadratic"


def test_free_algebra_growth():
    F = MonomialAlgebra.free()
    rep = growth_report(10, F.standard_frame())
    assert rep.dims() == [2 ** (n + 1) - 1 for n in range(11)]
    assert rep.verdict() == "not quadratic"


def test_gk_estimate_examples():
    assert gk_estimate([(n, n * n) for n in range(2, 20)], (2, 19)) == 2
    assert gk_estimate([(n, n) for n in range(2, 20)], (2, 19)) == 1
    with pytest.raises(InvalidArgument):
        gk_estimate([(2, 4), (3, 9)], (2, 3))


def test_bergman_examples():
    assert bergman_bound_check(2, V)
    assert bergman_bound_check(1, V)
    assert not bergman_bound_check(2, Frame([A.one]))
    assert all(bergman_bound_check(n, V) for n in range(0, 60))


def test_budget_is_a_hard_error():
    with pytest.raises(BudgetExceeded):
        dim_series(12, MonomialAlgebra.free().standard_frame(), Budget(span_limit=500))
