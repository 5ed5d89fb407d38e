"""Kernel selection: the compiled extension when importable, else pure Python.

The compiled kernels use checked 64-bit arithmetic and raise OverflowError
instead of wrapping; the dispatchers then rerun the exact pure-Python kernel,
so results never depend on which backend is active.  Set
``RANK2CRYSTALS_PURE=1`` to force the pure-Python kernels.
"""
import os

from . import _kernels_py

BACKEND = "python"
_compiled = None

if not os.environ.get("RANK2CRYSTALS_PURE"):
    try:
        from . import _kernels_c as _compiled
    except ImportError:
        _compiled = None
    else:
        BACKEND = "compiled"

if _compiled is None:
    prefix_scan = _kernels_py.prefix_scan
    height_scan = _kernels_py.height_scan
else:

    def prefix_scan(terms):
        try:
            return _compiled.prefix_scan(terms)
        except OverflowError:
            return _kernels_py.prefix_scan(terms)

    def height_scan(slopes, nums):
        try:
            return _compiled.height_scan(slopes, nums)
        except OverflowError:
            return _kernels_py.height_scan(slopes, nums)
