"""Subset-table kernels with a numba fast path and a pure-numpy fallback.

The backend is chosen once at import: numba when importable, unless
``MATROIDKL_DISABLE_NUMBA`` is set to a truthy value.  Both backends stay
importable as ``numpy_backend`` / ``numba_backend`` (the latter ``None`` when
numba is missing) so tests and the benchmark can compare them directly.
"""
from __future__ import annotations

import numpy as np

from ..config import numba_disabled
from . import _numpy as numpy_backend

try:
    from . import _numba as numba_backend
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba_backend = None

_active = numpy_backend if (numba_backend is None or numba_disabled()) else numba_backend

BACKEND = "numba" if _active is numba_backend else "numpy"


def _as_masks(bases) -> np.ndarray:
    return np.asarray(list(bases), dtype=np.int64)


def rank_table(n: int, bases) -> np.ndarray:
    """int8 table of rk(A) for every subset mask A of an n-element ground set."""
    return _active.rank_table(n, _as_masks(bases))


def flat_table(n: int, rank: np.ndarray) -> np.ndarray:
    return _active.flat_table(n, rank)


def submodularity_witness(n: int, rank: np.ndarray) -> tuple[int, int, int]:
    return _active.submodularity_witness(n, rank)


def tutte_histogram(n: int, rank: np.ndarray, k: int) -> np.ndarray:
    return _active.tutte_histogram(n, rank, k)


def uniform_restriction_table(n: int, rank: np.ndarray) -> np.ndarray:
    return _active.uniform_restriction_table(n, rank)


def popcount_table(n: int) -> np.ndarray:
    return _active.popcount_table(n)


__all__ = [
    "BACKEND",
    "flat_table",
    "numba_backend",
    "numpy_backend",
    "popcount_table",
    "rank_table",
    "submodularity_witness",
    "tutte_histogram",
    "uniform_restriction_table",
]
