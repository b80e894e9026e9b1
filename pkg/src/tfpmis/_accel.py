"""Backend switch for the compiled kernels.

Set ``TFPMIS_NUMBA=0`` in the environment to force the pure-numpy path.
"""

import os

_FLAG = os.environ.get("TFPMIS_NUMBA", "1").strip().lower()

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _FLAG not in ("0", "false", "no", "off")


def njit(fn):
    """Compile ``fn`` with numba when available, regardless of the env flag.

    Kernels are always compiled when numba exists so that the benchmark can
    compare both paths; the flag only decides which one the library calls.
    """
    if not HAVE_NUMBA:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)
