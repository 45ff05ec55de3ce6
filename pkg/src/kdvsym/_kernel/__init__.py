"""Kernel selection: compiled extension when available, pure Python otherwise.

Set KDVSYM_PURE=1 to force the pure-Python kernel (used by the benchmark
and the kernel-equivalence tests).
"""

import os

if os.environ.get("KDVSYM_PURE"):
    from . import _pure as impl
else:
    try:
        from . import _speedups as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as impl

mono_mul = impl.mono_mul
poly_add = impl.poly_add
poly_mul = impl.poly_mul
poly_scale = impl.poly_scale
KERNEL_NAME = impl.KERNEL_NAME


def kernel_name() -> str:
    """Name of the active term-arithmetic kernel ('speedups' or 'pure')."""
    return KERNEL_NAME
