"""Kernel backend selection.

Hot numeric loops (Monte Carlo stepping, counter-based RNG, long scalar
recurrences) are compiled with numba by default.  Setting the environment
variable ``EXITTIME_BACKEND=numpy`` before import selects a pure
numpy/Python fallback running the same arithmetic; it produces matching
results (bit-identical for integer RNG state, within an ulp for libm
calls) at lower speed.  ``benchmarks/bench_backends.py`` compares the two.

``EXITTIME_THREADS`` caps the number of numba threads used by the Monte
Carlo kernels (default: all available).
"""

from __future__ import annotations

import os

_requested = os.environ.get("EXITTIME_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ValueError(
        f"EXITTIME_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numba":
    try:
        import numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        numba = None
else:
    numba = None

USE_NUMBA = numba is not None

if USE_NUMBA:
    from numba import prange
else:
    prange = range


def jit(**kwargs):
    """Return numba.njit(cache=True, **kwargs), or a no-op decorator on the fallback."""
    if USE_NUMBA:
        kwargs.setdefault("cache", True)
        return numba.njit(**kwargs)

    def passthrough(fn):
        return fn

    return passthrough


def apply_thread_cap() -> int:
    """Apply the EXITTIME_THREADS cap and return the worker count in effect."""
    if not USE_NUMBA:
        return 1
    available = numba.config.NUMBA_NUM_THREADS
    cap = os.environ.get("EXITTIME_THREADS")
    n = available
    if cap:
        n = max(1, min(available, int(cap)))
    numba.set_num_threads(n)
    return n
