"""Kernel selection: compiled `_speedups` if built, else `_kernel_py`.

Set SKEWPBW_PURE=1 to force the pure-Python kernels.
"""

import os

if os.environ.get("SKEWPBW_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND
exp_add = _impl.exp_add
poly_neg = _impl.poly_neg
poly_scale = _impl.poly_scale
poly_add = _impl.poly_add
poly_iadd_scaled = _impl.poly_iadd_scaled
poly_mul = _impl.poly_mul
