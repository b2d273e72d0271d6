import pytest
from hypothesis import given, strategies as st

from growth_forge.extnat import ExtendedNat, materialization_threshold, parse_extnat, render

P1 = 2**65536


def real_tower(h, t):
    v = t
    for _ in range(h):
        v = 2**v
    return v


# (height, top) pairs whose true value is small enough to hold as an int
towers = st.sampled_from([(1, t) for t in range(1, 40)] + [(1, 100), (1, 257), (1, 1000), (1, 4096),
                                                         (2, 3), (2, 4), (2, 5), (2, 8), (2, 10), (2, 12)])
smalls = st.integers(min_value=0, max_value=2**20)


@st.composite
def values(draw):
    """(ExtendedNat, int) built from a few towers plus a remainder."""
    terms = draw(st.lists(towers, max_size=3))
    low = draw(smalls)
    x, n = ExtendedNat(low), low
    for h, t in terms:
        x = x + ExtendedNat.tower(h, t)
        n += real_tower(h, t)
    return x, n


def test_exact_arithmetic_stays_int():
    a = ExtendedNat(10**30)
    assert (a + 5).to_int() == 10**30 + 5
    assert a.is_exact


def test_tower_values():
    assert ExtendedNat.tower(1, 65536).to_int() == P1
    assert render(ExtendedNat.tower(1, 65536) + 131076) == "2^^(1;65536)+131076"
    assert render(ExtendedNat.tower(2, 65536)) == "2^^(2;65536)"


def test_symbolic_beyond_threshold():
    big = ExtendedNat.tower(4, 3)
    assert not big.is_exact
    with pytest.raises(Exception):
        big.to_int()
    assert big > ExtendedNat.tower(3, 3)
    assert big + 1 > big
    assert (big + 7) - big == 7


def test_negative_difference_rejected():
    with pytest.raises(ValueError):
        ExtendedNat(3) - ExtendedNat(5)


@given(values(), values())
def test_matches_int_arithmetic_under_small_threshold(a, b):
    (x, n), (y, m) = a, b
    with materialization_threshold(16):
        x2 = ExtendedNat(0) + x
        y2 = ExtendedNat(0) + y
        assert (x2 < y2) == (n < m)
        assert (x2 == y2) == (n == m)
        assert (x2 <= y2) == (n <= m)
        s = x2 + y2
        assert s == ExtendedNat(0) + ExtendedNat(n + m) or s.is_exact
        if n >= m:
            d = x2 - y2
            assert (d == ExtendedNat(n - m))
        assert (x2 * 3 == ExtendedNat(3 * n))
    # at the default threshold everything here is exact
    assert (x + y).to_int() == n + m


@given(values())
def test_render_parse_round_trip(a):
    x, n = a
    with materialization_threshold(16):
        x2 = ExtendedNat(0) + x
        back = parse_extnat(render(x2))
        assert back == x2


@given(st.integers(min_value=0, max_value=2**200))
def test_parse_plain_integers(n):
    assert parse_extnat(str(n)).to_int() == n


def test_parse_forms():
    assert parse_extnat("2^^(1;65536)+131076") == ExtendedNat(P1 + 131076)
    assert parse_extnat("2^(10) - 24").to_int() == 1000
    assert parse_extnat("3*2^^(1;4)").to_int() == 48
