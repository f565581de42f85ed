"""Kernel backend selection.

``GZARISKI_BACKEND=numpy`` forces the pure-numpy path; the default is numba
when it imports cleanly.
"""
import os

REQUESTED = os.environ.get("GZARISKI_BACKEND", "numba").strip().lower()

try:
    import numba  # noqa: F401
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and REQUESTED != "numpy"
BACKEND = "numba" if USE_NUMBA else "numpy"
