"""Switch between numba-compiled kernels and their plain numpy fallback.

Set ``RAMSEY_BOUNDS_DISABLE_NUMBA=1`` before import to run every kernel as
ordinary Python over numpy arrays. The flag is read once, at import time.
"""

import os

_FLAG = "RAMSEY_BOUNDS_DISABLE_NUMBA"

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_ENABLED = numba is not None and os.environ.get(_FLAG, "").strip().lower() not in (
    "1",
    "true",
    "yes",
    "on",
)


def njit(func):
    """Compile ``func`` with ``numba.njit(cache=True)`` when enabled.

    The undecorated function stays reachable as ``func.py_func`` either way,
    so tests and benchmarks can always call the fallback path.
    """
    if NUMBA_ENABLED:
        return numba.njit(cache=True)(func)
    func.py_func = func
    return func
