"""Time the compiled kernels against the pure-Python ones on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3]

Prints one line per kernel with the best time of each backend and the
speedup.  Both backends must return identical results.
"""
import argparse
import random
import timeit

from growth_forge._kernels import _pycore

try:
    from growth_forge._kernels import _ccore
except ImportError:
    _ccore = None


def prefix(k):
    v = "x"
    for j in range(k - 1):
        v = v + "y" * 2 ** (j + 1) + v
    return v


def cases():
    text = prefix(12).encode()
    positions = [i for i, ch in enumerate(prefix(14)) if ch == "x"]
    rng = random.Random(1)
    rows = [[rng.randrange(7) for _ in range(120)] for _ in range(160)]
    return [
        ("factor_counts(v_12, 80)", "factor_counts", (text, 80)),
        ("min_window_spans(v_14, 2000)", "min_window_spans", (positions, 2000)),
        ("nullspace_mod_p(160x120, 7)", "nullspace_mod_p", (rows, 120, 7)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ccore is None:
        print("compiled extension not built; only the Python kernels are available")
    print(f"{'kernel':<32} {'python (s)':>11} {'cython (s)':>11} {'speedup':>8}")
    for label, name, call_args in cases():
        py = getattr(_pycore, name)
        t_py = min(timeit.repeat(lambda: py(*call_args), number=1, repeat=args.repeat))
        if _ccore is None:
            print(f"{label:<32} {t_py:>11.4f} {'-':>11} {'-':>8}")
            continue
        cy = getattr(_ccore, name)
        if cy(*call_args) != py(*call_args):
            raise SystemExit(f"{name}: backends disagree")
        t_cy = min(timeit.repeat(lambda: cy(*call_args), number=1, repeat=args.repeat))
        print(f"{label:<32} {t_py:>11.4f} {t_cy:>11.4f} {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
