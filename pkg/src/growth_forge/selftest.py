"""Fast end-to-end checks behind ``growth-forge selftest``."""
from __future__ import annotations

import random

from .algebra import MonomialAlgebra
from .centre import GroupRing, b_dim_naive, b_dim_Vn, central_witness
from .extnat import render
from .group import GroupElement, commutator, inverse, multiply, parse_group
from .growth import dim_series
from .lemmas import nilpotency_index, reduction_search
from .words import RunSequenceSpec, build_prefix, factor_counts, max_x_occurrences, word_length


def _random_group_element(rng: random.Random) -> GroupElement:
    def part():
        return {rng.randint(-3, 3): rng.randint(-2, 2) for _ in range(rng.randint(0, 2))}

    return GroupElement(part(), part(), part(), rng.randint(-2, 2))


def run_selftest(seed: int = 0):
    rng = random.Random(seed)
    geo2 = RunSequenceSpec.geometric(2)
    tower = RunSequenceSpec.tower()
    checks = []

    def check(name, fn):
        try:
            ok = bool(fn())
        except Exception as exc:  # a crash is reported as a failed check
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        checks.append((name, ok))

    check("tower v_2 = x y^65536 x", lambda: str(build_prefix(2, tower)) == "x y^65536 x")
    check("tower |v_3| = 2^65536 + 131076",
          lambda: word_length(3, tower).to_int() == 2**65536 + 131076
          and render(word_length(3, tower)) == "2^^(1;65536)+131076")
    check("tower max_x(65538) = 2", lambda: max_x_occurrences(65538, tower) == 2)
    check("geo:2 dim V^n starts 1, 3, 6, 10, 16",
          lambda: dim_series(4, MonomialAlgebra.for_spec(geo2).standard_frame()) == [1, 3, 6, 10, 16])
    check("geo:2 factor counts are increasing", lambda: all(
        a <= b for a, b in zip(factor_counts(60, geo2)[1:], factor_counts(60, geo2)[2:])))
    A = MonomialAlgebra.for_spec(geo2)
    check("nilpotency_index(x, 1) = 2", lambda: nilpotency_index(A.x, 1, 8, A.standard_frame()) == 2)
    check("control reduction for x is (0, 1)", lambda: (
        lambda r: r is not None and (r.m, r.p) == (0, 1))(
        reduction_search(MonomialAlgebra.control().x, 2, MonomialAlgebra.control().standard_frame())))
    check("s(1) t(0) = z(1) t(0) s(1)", lambda: str(parse_group("s(1) t(0)")) == "z(1) t(0) s(1)")
    check("commutator(s_1, t_0) = z_1",
          lambda: commutator(GroupElement.s_(1), GroupElement.t_(0)) == GroupElement.z_(1))

    def assoc():
        for _ in range(300):
            a, b, c = (_random_group_element(rng) for _ in range(3))
            if multiply(multiply(a, b), c) != multiply(a, multiply(b, c)):
                return False
            if not multiply(a, inverse(a)).is_identity():
                return False
        return True

    check("group associativity and inverses (300 random triples)", assoc)
    ring = GroupRing.for_spec(geo2)
    check("b_dim_Vn(1) = 9", lambda: b_dim_Vn(1, geo2) == 9)
    check("b_dim_Vn agrees with the naive oracle for n <= 5",
          lambda: all(b_dim_Vn(n, geo2) == b_dim_naive(n, ring) for n in range(6)))
    check("central witness for z_1 verifies", lambda: central_witness(1, geo2)[1].verify(ring))
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in checks]
    ok = all(ok for _, ok in checks)
    lines.append(f"{sum(o for _, o in checks)}/{len(checks)} checks passed (seed {seed})")
    return ok, lines
