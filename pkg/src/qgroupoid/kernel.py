"""Kernel backend selection.

Prefers the compiled extension when it has been built; falls back to the
pure-Python implementation with identical semantics.  Set QGROUPOID_PURE=1
to force the fallback (used by the benchmark and the parity tests).
"""

import os

if os.environ.get("QGROUPOID_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND
poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_neg = _impl.poly_neg
poly_scale = _impl.poly_scale
poly_mul = _impl.poly_mul
poly_diff = _impl.poly_diff
