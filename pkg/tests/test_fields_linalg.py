from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from growth_forge.errors import InvalidArgument
from growth_forge.fields import QQ, PrimeField, parse_field
from growth_forge.linalg import Echelon, left_kernel

import oracles

GF7 = PrimeField(7)
rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)


def test_parse_field():
    assert parse_field("rationals") == QQ
    assert parse_field("gf:5") == PrimeField(5)
    for bad in ("gf:4", "gf:x", "reals"):
        with pytest.raises(InvalidArgument):
            parse_field(bad)


def test_prime_field_coercion():
    assert GF7(Fraction(1, 2)) == 4
    assert GF7(-1) == 6
    with pytest.raises(ZeroDivisionError):
        GF7(Fraction(1, 7))
    with pytest.raises(ZeroDivisionError):
        GF7.inv(0)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    F = QQ
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a != 0:
        assert F.mul(a, F.inv(a)) == 1


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_prime_field_axioms(a, b, c):
    F = GF7
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.sub(a, b) == F.add(a, F.neg(b))
    if a:
        assert F.mul(a, F.inv(a)) == 1


sparse_rows = st.lists(
    st.dictionaries(st.sampled_from(["", "x", "y", "xy", "yx", "yy"]),
                    st.integers(-3, 3).filter(bool), max_size=4),
    max_size=7,
)


@given(sparse_rows)
def test_echelon_rank_matches_oracle(rows):
    ech = Echelon(QQ)
    for r in rows:
        ech.add(r)
    assert ech.rank == oracles.rank(rows)
    for r in rows:
        assert ech.contains(r)


@given(sparse_rows, st.sampled_from([QQ, GF7]))
def test_left_kernel(rows, F):
    rows = [{k: F(v) for k, v in r.items() if F(v) != F.zero} for r in rows]
    rank, kernel = left_kernel(rows, F)
    p = None if F is QQ else F.p
    assert rank == oracles.rank(rows, p)
    assert len(kernel) == len(rows) - rank
    for vec in kernel:
        assert any(c != F.zero for c in vec)
        total = {}
        for c, r in zip(vec, rows):
            for k, v in r.items():
                total[k] = F.add(total.get(k, F.zero), F.mul(c, v))
        assert all(v == F.zero for v in total.values())


def test_tracked_reduction_decomposes():
    ech = Echelon(QQ, track=True)
    a, b = {"x": 1, "y": 2}, {"y": 1}
    ech.add(a, "a")
    ech.add(b, "b")
    res, combo = ech.reduce({"x": 3, "y": 1})
    assert res == {}
    # 3a - 5b
    assert {ech.label(i): c for i, c in combo.items()} == {"a": 3, "b": -5}
