import warnings

import pytest
from hypothesis import given, strategies as st

from growth_forge.algebra import MonomialAlgebra
from growth_forge.centre import GroupRing
from growth_forge.errors import ParseError
from growth_forge.group import GroupElement as G
from growth_forge.parsing import NonFactorWarning, parse_element
from growth_forge.words import RunSequenceSpec

GEO2 = RunSequenceSpec.geometric(2)
A = MonomialAlgebra.for_spec(GEO2)
R = GroupRing.for_spec(GEO2)


def test_examples():
    assert str(parse_element("s(1) t(0)", "group")) == "z(1) t(0) s(1)"
    with pytest.warns(NonFactorWarning):
        assert not parse_element("x*x", "algebra", A)
    with pytest.warns(NonFactorWarning):
        assert not parse_element("(x : u)^2", "groupring", R)


def test_algebra_grammar():
    assert parse_element("3*x*y^2 + y", "algebra", A) == A.monomial("xyy", 3) + A.y
    assert parse_element("x y y", "algebra", A) == A.monomial("xyy")
    assert parse_element("(x + y)*x", "algebra", A) == A.monomial("yx")
    assert parse_element("2/3*y - 1", "algebra", A) == A.monomial("y", "2/3") - A.one
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        parse_element("x*y^2*x", "algebra", A)


def test_groupring_grammar():
    e = parse_element("(x*y^2*x : z(1) t(0) s(1)) + 2*(y : e)", "groupring", R)
    assert str(e) == "2*(y : e) + (x*y^2*x : z(1) t(0) s(1))"
    assert e == R.term("xyyx", G(z={1: 1}, t={0: 1}, s={1: 1})) + R.term("y", coeff=2)
    T = GroupRing.for_spec(RunSequenceSpec.tower())
    big = parse_element("(x*y^(2^^(1;65536))*x : u)", "groupring", T)
    assert str(big) == "(x*y^(2^^(1;65536))*x : u)"
    with pytest.warns(NonFactorWarning):
        assert not parse_element("(x*y^(2^^(1;65536)+1)*x : e)", "groupring", T)


@pytest.mark.parametrize("grammar,text", [
    ("algebra", "3*x +"), ("algebra", "x^"), ("algebra", "(x"), ("algebra", ""),
    ("group", "s(1"), ("groupring", "(x : q(1))"), ("groupring", "(x u)"),
])
def test_syntax_errors_have_positions(grammar, text):
    ctx = A if grammar == "algebra" else R if grammar == "groupring" else None
    with pytest.raises(ParseError) as info:
        parse_element(text, grammar, ctx)
    assert info.value.position is not None


words = st.sampled_from(["", "x", "y", "xy", "yx", "yy", "xyyx", "yyxyyyy", "yxyyx"])
alg_elems = st.dictionaries(words, st.fractions(max_denominator=5).filter(bool), max_size=4)


@given(alg_elems)
def test_algebra_round_trip(terms):
    e = A.element(terms)
    assert parse_element(str(e), "algebra", A) == e


@given(st.lists(st.tuples(words, st.integers(-3, 3), st.integers(-2, 2), st.integers(-3, 3).filter(bool)),
                max_size=3))
def test_groupring_round_trip(items):
    e = sum((R.term(w, G(s={i: 1}, u=k), c) for w, i, k, c in items), R.zero)
    assert parse_element(str(e), "groupring", R) == e
