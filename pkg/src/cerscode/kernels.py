"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``CERSCODE_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _purepy

BACKEND = "python"
all_pairs_distances = _purepy.all_pairs_distances
median_violation = _purepy.median_violation

if not os.environ.get("CERSCODE_PURE_PYTHON"):
    try:
        from . import _kernels
    except ImportError:
        _kernels = None
    else:
        BACKEND = "cython"
        all_pairs_distances = _kernels.all_pairs_distances
        median_violation = _kernels.median_violation
else:
    _kernels = None

__all__ = ["BACKEND", "all_pairs_distances", "median_violation"]
