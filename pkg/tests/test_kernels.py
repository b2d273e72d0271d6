import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from growth_forge._kernels import _pycore

try:
    from growth_forge._kernels import _ccore
except ImportError:  # extension not built
    _ccore = None

needs_c = pytest.mark.skipif(_ccore is None, reason="compiled kernels not built")
texts = st.text(alphabet="xy", min_size=0, max_size=200).map(str.encode)


def brute_counts(text, max_len):
    return [1] + [len({text[i:i + ell] for i in range(len(text) - ell + 1)})
                  for ell in range(1, max_len + 1)]


@given(texts, st.integers(0, 30))
def test_python_factor_counts_against_brute_force(text, max_len):
    assert _pycore.factor_counts(text, max_len) == brute_counts(text, max_len)


@needs_c
@given(st.text(alphabet="xyz", max_size=200).map(str.encode), st.integers(0, 30))
def test_backends_agree_on_factor_counts(text, max_len):
    assert list(_ccore.factor_counts(text, max_len)) == _pycore.factor_counts(text, max_len)


@needs_c
@given(st.lists(st.integers(0, 10**6), max_size=80, unique=True).map(sorted), st.integers(1, 40))
def test_backends_agree_on_window_spans(pos, r_max):
    assert list(_ccore.min_window_spans(pos, r_max)) == _pycore.min_window_spans(pos, r_max)


def _check_kernel(rows, ncols, p, rank, kernel):
    assert len(kernel) == len(rows) - rank
    for vec in kernel:
        for col in range(ncols):
            assert sum(c * r[col] for c, r in zip(vec, rows)) % p == 0
        assert any(v % p for v in vec)


@given(st.integers(1, 8), st.integers(1, 8), st.data())
def test_nullspace_backends(m, ncols, data):
    p = 7
    rows = [data.draw(st.lists(st.integers(0, p - 1), min_size=ncols, max_size=ncols)) for _ in range(m)]
    rank, kernel = _pycore.nullspace_mod_p(rows, ncols, p)
    _check_kernel(rows, ncols, p, rank, kernel)
    if _ccore is not None:
        rank2, kernel2 = _ccore.nullspace_mod_p(rows, ncols, p)
        assert rank2 == rank
        assert [list(v) for v in kernel2] == [list(v) for v in kernel]


def test_pure_python_switch():
    env = dict(os.environ, GROWTH_FORGE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import growth_forge; print(growth_forge.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_backend_name():
    mod = importlib.import_module("growth_forge._kernels")
    assert mod.BACKEND in ("python", "cython")
    if _ccore is not None and os.environ.get("GROWTH_FORGE_PURE_PYTHON") is None:
        assert mod.BACKEND == "cython"
