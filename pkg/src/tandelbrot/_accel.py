"""Numba toggle.

Set TANDELBROT_NO_NUMBA=1 to run the hot kernels as plain interpreted
Python/numpy.  The fallback executes the exact same code path, so outputs
are bit-identical between the two modes; only speed differs (see
bench/benchmark.py).
"""

import os


def _flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() not in ("", "0", "false", "no")


NUMBA_DISABLED = _flag("TANDELBROT_NO_NUMBA")

if not NUMBA_DISABLED:
    try:
        import numba as _numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_DISABLED = True

if NUMBA_DISABLED:

    def jit(func=None, **kwargs):
        if func is None:
            return lambda f: f
        return func

    USING_NUMBA = False
else:

    def jit(func=None, **kwargs):
        kwargs.setdefault("cache", True)
        kwargs.setdefault("nogil", True)
        if func is None:
            return _numba.njit(**kwargs)
        return _numba.njit(**kwargs)(func)

    USING_NUMBA = True
