"""Kernel backend selection, resolved once at import.

The compiled extension is preferred when built; the pure-Python module is
the fallback. Set ``EDC_BACKEND=python`` or ``EDC_BACKEND=c`` to force a
choice (the benchmark uses this to compare both).
"""

import os

from edc import _kernels_py


def _load():
    forced = os.environ.get("EDC_BACKEND", "").strip().lower()
    if forced in ("python", "py", "pure"):
        return _kernels_py
    try:
        from edc import _kernels
    except ImportError:
        if forced in ("c", "cython", "compiled"):
            raise RuntimeError(
                f"EDC_BACKEND={forced!r} requested but the compiled kernel is not built"
            ) from None
        return _kernels_py
    return _kernels


kernels = _load()


def backend_name() -> str:
    """Name of the active kernel backend: 'c' or 'python'."""
    return kernels.BACKEND_NAME
