"""Kernel backend selection.

The compiled Cython core is preferred when importable; GREENP_FF_BACKEND
forces the choice ("compiled" or "pure").  Everything above this module
calls mat_mul/rref through here and never notices the difference.
"""

import os

from . import _pure

_requested = os.environ.get("GREENP_FF_BACKEND", "auto").strip().lower()

name = "pure"
_impl = _pure

if _requested in ("auto", "", "compiled"):
    try:
        from . import _core

        _impl = _core
        name = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise ImportError(
                "GREENP_FF_BACKEND=compiled but the compiled core is not built; "
                "reinstall the package or set GREENP_FF_BACKEND=pure"
            )
elif _requested not in ("pure", "python"):
    raise ValueError(f"unknown GREENP_FF_BACKEND value {_requested!r}")


def mat_mul(a, b, q):
    return _impl.mat_mul(a, b, q)


def rref(a, q):
    return _impl.rref(a, q)


def backend_name() -> str:
    return name
