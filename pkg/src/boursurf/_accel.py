"""Backend selection for the numeric kernels.

Kernels are written twice: a numba ``@njit`` version (loop form) and a
vectorised numpy version. ``BOURSURF_BACKEND=numpy`` forces the numpy path;
the numba path is used otherwise whenever numba imports cleanly.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a soft dependency
    numba = None

_requested = os.environ.get("BOURSURF_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ValueError(f"BOURSURF_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and _requested == "numba"


def njit(*args, **kwargs):
    """``numba.njit`` when available, identity decorator otherwise."""
    if numba is None:
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f
    kwargs.setdefault("cache", True)
    return numba.njit(*args, **kwargs)


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
