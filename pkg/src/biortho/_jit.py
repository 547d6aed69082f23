"""Optional numba acceleration.

Set ``BIORTHO_JIT=0`` to run every kernel through the plain numpy/Python path.
"""
import os

_flag = os.environ.get("BIORTHO_JIT", "1").strip().lower()
JIT_REQUESTED = _flag not in ("0", "false", "no", "off")

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False

USE_JIT = JIT_REQUESTED and HAVE_NUMBA


def jit(fn):
    """Compile with numba when enabled, otherwise return ``fn`` untouched."""
    if USE_JIT:
        return numba.njit(cache=True, fastmath=False)(fn)
    return fn
