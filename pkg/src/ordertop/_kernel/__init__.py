"""Kernel selection: the compiled elimination core when built, pure Python otherwise.

Set ORDERTOP_PURE=1 to force the pure kernel (used by the benchmark and the
backend-equivalence tests).
"""

import os

from . import _pure

if os.environ.get("ORDERTOP_PURE"):
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = "pure" if _impl is _pure else "compiled"


def active():
    """The selected kernel module."""
    return _impl


def pure():
    """The pure-Python kernel (big-integer fallback path)."""
    return _pure
