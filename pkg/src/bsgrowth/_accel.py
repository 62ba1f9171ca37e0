"""Optional numba acceleration.

Set ``BSG_DISABLE_NUMBA=1`` to force the pure numpy/Python kernels even when
numba is importable.  The flag is read once, at import time.
"""

import os

_DISABLED = os.environ.get("BSG_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("disabled by BSG_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        # Supports both @njit and @njit(cache=True) spellings.
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def decorator(fn):
            return fn

        return decorator


__all__ = ["HAVE_NUMBA", "njit"]
