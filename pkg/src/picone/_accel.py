"""Numba acceleration toggle.

Hot kernels are decorated with :func:`maybe_njit`.  By default they are
compiled with numba's ``@njit``; setting the environment variable
``PICONE_NO_NUMBA=1`` (before import) selects the pure-numpy/python
fallback path instead.  ``benchmarks/bench_accel.py`` compares the two.
"""

import os

import numpy as np

USE_NUMBA = os.environ.get("PICONE_NO_NUMBA", "0").lower() not in ("1", "true", "yes")

if USE_NUMBA:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False

if USE_NUMBA:

    def maybe_njit(func=None, **kwargs):
        kwargs.setdefault("cache", True)
        if func is None:
            return lambda f: _njit(f, **kwargs)
        return _njit(func, **kwargs)

else:

    def maybe_njit(func=None, **kwargs):
        if func is None:
            return lambda f: f
        return func


if USE_NUMBA:

    @maybe_njit
    def rowdot(a, b):
        n = a.shape[0]
        out = np.empty(n)
        for i in range(n):
            s = 0.0
            for j in range(a.shape[1]):
                s += a[i, j] * b[i, j]
            out[i] = s
        return out

else:

    def rowdot(a, b):
        return np.einsum("ij,ij->i", a, b)


def rownorm(a):
    return np.sqrt(rowdot(a, a))
