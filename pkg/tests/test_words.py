import random

import pytest
from hypothesis import given, strategies as st

from growth_forge.config import Budget
from growth_forge.errors import BudgetExceeded, InvalidArgument
from growth_forge.extnat import ExtendedNat
from growth_forge.words import (
    RunSequenceSpec,
    RunWord,
    build_prefix,
    empirical_stable_level,
    factor_complexity,
    factor_counts,
    factor_set,
    factor_x_profile,
    is_factor,
    max_x_occurrences,
    max_x_table,
    prefix_string,
    ruler_level,
    shortest_bridge,
    stabilization_check,
    stable_level,
    word_length,
)

import oracles

GEO2 = RunSequenceSpec.geometric(2)
GEO3 = RunSequenceSpec.geometric(3)
FIB = RunSequenceSpec.explicit([1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610])
TOWER = RunSequenceSpec.tower()
SCALED = [(GEO2, oracles.geo_runs(2)), (GEO3, oracles.geo_runs(3)), (FIB, list(FIB.values))]


def test_ruler_level():
    assert [ruler_level(i) for i in range(1, 9)] == [1, 2, 1, 3, 1, 2, 1, 4]


def test_spec_parsing_and_validation():
    assert RunSequenceSpec.parse("tower") == TOWER
    assert RunSequenceSpec.parse("geo:3") == GEO3
    assert RunSequenceSpec.parse("list:1,2,3").values == (1, 2, 3)
    for bad in ("geo:1", "list:3,2", "list:0,1", "nope", "list:"):
        with pytest.raises(InvalidArgument):
            RunSequenceSpec.parse(bad)


def test_build_prefix_examples():
    for spec in (GEO2, TOWER, FIB):
        assert str(build_prefix(1, spec)) == "x"
    assert str(build_prefix(2, TOWER)) == "x y^65536 x"
    assert build_prefix(3, GEO2).materialize() == "xyyxyyyyxyyx"
    with pytest.raises(InvalidArgument):
        build_prefix(0, GEO2)


def test_run_limit():
    with pytest.raises(BudgetExceeded):
        build_prefix(12, GEO2, Budget(run_limit=100))


def test_word_length():
    assert word_length(1, TOWER) == 1
    assert word_length(2, TOWER) == 65538
    assert word_length(3, TOWER).to_int() == 2**65536 + 131076
    for k in range(1, 12):
        assert word_length(k, GEO2) == k * 2 ** (k - 1)


@pytest.mark.parametrize("spec,runs", SCALED)
def test_prefix_matches_oracle(spec, runs):
    for k in range(1, 9):
        assert prefix_string(k, spec) == oracles.prefix(k, runs)


def test_runword_text_round_trip():
    for text in ["x y^65536 x", "1", "y^(2^^(1;65536))", "x y^(2^^(2;256)+3) x y"]:
        w = RunWord.parse(text)
        assert str(w) == text
        assert RunWord.parse(str(w)) == w
    assert RunWord.parse("x*y^2*x") == RunWord.from_str("xyyx")


@given(st.text(alphabet="xy", max_size=40))
def test_runword_from_str_round_trip(s):
    w = RunWord.from_str(s)
    assert w.materialize() == s
    assert RunWord.parse(str(w)) == w
    assert w.length() == len(s)
    assert w.count("x") == s.count("x")


def test_is_factor_examples():
    assert not is_factor("xx", GEO2)
    assert is_factor(RunWord([("y", ExtendedNat.tower(3, 5))]), TOWER)
    assert not is_factor("xyyxyyx", GEO2)
    assert is_factor("xyyxyyyyx", GEO2)
    assert is_factor(RunWord.parse("x y^65536 x"), TOWER)
    assert not is_factor(RunWord.parse("x y^65535 x"), TOWER)
    assert is_factor(RunWord.parse("x y^65536 x y^(2^^(1;65536)) x"), TOWER)


@pytest.mark.parametrize("spec,runs", SCALED)
def test_factor_sets_match_oracle(spec, runs):
    text = oracles.prefix(12, runs)
    for ell in range(1, 40):
        assert factor_set(ell, spec) == oracles.factors(text, ell)


@pytest.mark.parametrize("spec,runs", SCALED)
def test_is_factor_agrees_with_oracle(spec, runs):
    text = oracles.prefix(12, runs)
    rng = random.Random(5)
    for _ in range(400):
        n = rng.randint(1, 30)
        w = "".join(rng.choice("xyy") for _ in range(n))
        assert is_factor(w, spec) == (w in text)
        # the run path must give the same answer
        assert is_factor(RunWord.from_str(w), spec, Budget(char_limit=1)) == (w in text)


def test_factor_complexity_examples():
    assert factor_complexity(1, GEO2) == 2
    assert factor_complexity(2, GEO2) == 3
    text = oracles.prefix(10, oracles.geo_runs(2))
    assert factor_complexity(4, GEO2) == len(oracles.factors(text, 4))


def test_factor_counts_structural_path_agrees():
    for spec, _ in SCALED:
        fast = factor_counts(60, spec)
        assert fast == [1] + [sum(factor_x_profile(ell, spec).values()) for ell in range(1, 61)]


def test_tower_factor_counts():
    # below 65536 every factor has at most one x
    assert factor_counts(10, TOWER) == [1] + [ell + 1 for ell in range(1, 11)]
    assert factor_x_profile(65538, TOWER) == {0: 1, 1: 65538, 2: 1}


def test_morse_hedlund_and_factoriality():
    counts = factor_counts(200, GEO2)
    for ell in range(1, 200):
        assert counts[ell + 1] > counts[ell] >= ell + 1
    for w in factor_set(14, GEO2):
        assert all(is_factor(w[i:j], GEO2) for i in range(len(w)) for j in range(i + 1, len(w) + 1))
        assert is_factor(w + "x", GEO2) or is_factor(w + "y", GEO2)


def test_doubling_structure():
    runs = oracles.geo_runs(2)
    text = oracles.prefix(10, runs)
    for i in range(1, 8):
        gap_i = "x" + "y" * runs[i - 1] + "x"
        occurrences = sum(1 for k in range(len(text)) if text.startswith(gap_i, k))
        for d in range(0, 8):
            if i + d <= 9 and occurrences >= 2**d:
                assert ("x" + "y" * runs[i + d - 1] + "x") in text


def test_max_x_examples():
    assert max_x_occurrences(2, GEO2) == 1
    assert max_x_occurrences(9, GEO2) == 3
    assert max_x_occurrences(65538, TOWER) == 2
    assert max_x_occurrences(65537, TOWER) == 1


@pytest.mark.parametrize("spec,runs", SCALED)
def test_max_x_matches_oracle(spec, runs):
    text = oracles.prefix(12, runs)
    ref = oracles.max_x_table(text, 200)
    assert max_x_table(200, spec) == ref
    assert [max_x_occurrences(ell, spec) for ell in range(201)] == ref


def test_stabilization():
    assert stabilization_check(1, 2, GEO2)
    assert stabilization_check(3, 3, GEO2) == (factor_set(3, GEO2) == oracles.factors(prefix_string(3, GEO2), 3)
                                               and oracles.factors(prefix_string(3, GEO2), 3)
                                               == oracles.factors(prefix_string(4, GEO2), 3))
    k = 4
    assert not stabilization_check(word_length(k, GEO2).to_int() + 1, k, GEO2)


@pytest.mark.parametrize("spec,runs", SCALED)
def test_stable_level_is_sufficient(spec, runs):
    big = oracles.prefix(13, runs)
    for ell in range(1, 60):
        k = stable_level(ell, spec)
        assert oracles.factors(oracles.prefix(k, runs), ell) == oracles.factors(big, ell)
        assert empirical_stable_level(ell, spec) <= k


def brute_bridge(w1, w2, bound, text):
    for n in range(bound + 1):
        cands = sorted({text[i + len(w1):i + len(w1) + n] for i in range(len(text))
                        if text.startswith(w1, i) and text.startswith(w2, i + len(w1) + n)})
        if cands:
            return cands[0]
    return None


def test_shortest_bridge_against_brute_force():
    runs = oracles.geo_runs(2)
    text = oracles.prefix(12, runs)
    rng = random.Random(11)
    facs = sorted(factor_set(6, GEO2))
    for _ in range(60):
        w1, w2 = rng.choice(facs), rng.choice(facs)
        assert shortest_bridge(w1, w2, 40, GEO2) == brute_bridge(w1, w2, 40, text)


def test_bridges_on_tower():
    assert shortest_bridge("x", "x", 10**6, TOWER) == "y" * 65536
    out = shortest_bridge(RunWord.parse("x y^65536 x"), RunWord.parse("x"),
                          ExtendedNat.tower(1, 65537), TOWER)
    assert str(out) == "y^(2^^(1;65536))"
    assert shortest_bridge("xyyx", "x", 100, GEO2) == "yyyy"
