"""Kernel backend selection.

The compiled extension is used when it was built and importable; setting the
environment variable ``GROWTH_FORGE_PURE_PYTHON=1`` forces the Python versions.
"""
import os

from . import _pycore

BACKEND = "python"
if os.environ.get("GROWTH_FORGE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ccore as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pycore
else:
    _impl = _pycore

factor_counts = _impl.factor_counts
min_window_spans = _impl.min_window_spans
nullspace_mod_p = _impl.nullspace_mod_p

__all__ = ["BACKEND", "factor_counts", "min_window_spans", "nullspace_mod_p"]
