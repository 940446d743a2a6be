"""Numba switch.

Set ``TPSQUBITS_NO_NUMBA=1`` to force the pure-numpy kernels. Numba is also
skipped silently when it is not importable.
"""

import os

_disabled = os.environ.get("TPSQUBITS_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _disabled:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    njit = None
    HAVE_NUMBA = False


def maybe_njit(**options):
    """Decorator: ``numba.njit(**options)`` when enabled, identity otherwise."""

    def wrap(fn):
        if HAVE_NUMBA:
            return njit(**options)(fn)
        return fn

    return wrap
