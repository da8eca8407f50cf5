"""Kernel backend selection.

Prefers the compiled extension when it was built; falls back to the numpy
implementation otherwise. Setting the environment variable
``DIGITAUDIT_PURE=1`` forces the fallback (used by the benchmark and CI).
"""

import os

if os.environ.get("DIGITAUDIT_PURE"):
    from . import _purekernels as _impl

    _BACKEND = "pure"
else:
    try:
        from . import _fastkernels as _impl

        _BACKEND = "compiled"
    except ImportError:
        from . import _purekernels as _impl

        _BACKEND = "pure"

nth_digit_tail_sum = _impl.nth_digit_tail_sum
imperfect_scan = _impl.imperfect_scan


def kernel_backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'pure'."""
    return _BACKEND
