"""Kernel backend selection.

At import time the compiled extension is preferred; the pure-Python kernels
are the fallback.  ``EINBOOL_BACKEND=pure`` or ``=compiled`` forces a choice
(the latter raises if the extension is not built).  Backends are functionally
identical; ``tests/test_backends.py`` cross-checks them.
"""

from __future__ import annotations

import os

from . import _kernels_py

_requested = os.environ.get("EINBOOL_BACKEND", "auto").lower()

if _requested not in ("auto", "pure", "compiled"):
    raise ImportError(f"EINBOOL_BACKEND must be auto, pure or compiled, not {_requested!r}")

if _requested == "pure":
    _impl = _kernels_py
    BACKEND = "pure-python"
elif _requested == "compiled":
    from . import _kernels_c as _impl  # type: ignore[no-redef]

    BACKEND = "compiled"
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "pure-python"

matmul = _impl.matmul
transpose_bits = _impl.transpose_bits


def backend_name() -> str:
    """Which kernel implementation this process is running on."""
    return BACKEND
