"""Vectorized numpy versions of the subset-table kernels.

Every table is indexed by subset bitmask, length ``2**n``.  The per-bit
passes use the reshape trick: viewing the table as ``(-1, 2, 2**e)`` puts
the masks without bit ``e`` at ``[:, 0, :]`` and their partners with the bit
set at ``[:, 1, :]``.
"""
from __future__ import annotations

import numpy as np


def popcount_table(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(1 << n, dtype=np.int8)
    for e in range(n):
        pc += ((idx >> e) & 1).astype(np.int8)
    return pc


def _split(arr: np.ndarray, e: int) -> np.ndarray:
    return arr.reshape(-1, 2, 1 << e)


def rank_table(n: int, bases: np.ndarray) -> np.ndarray:
    size = 1 << n
    ind = np.zeros(size, dtype=bool)
    ind[bases] = True
    # independent = subset of some basis: OR over supersets
    for e in range(n):
        v = _split(ind, e)
        v[:, 0, :] |= v[:, 1, :]
    rank = np.where(ind, popcount_table(n), 0).astype(np.int8)
    # rank = largest independent subset: max over subsets
    for e in range(n):
        v = _split(rank, e)
        np.maximum(v[:, 1, :], v[:, 0, :], out=v[:, 1, :])
    return rank


def flat_table(n: int, rank: np.ndarray) -> np.ndarray:
    flat = np.ones(1 << n, dtype=bool)
    for e in range(n):
        v = _split(rank, e)
        f = _split(flat, e)
        f[:, 0, :] &= v[:, 1, :] > v[:, 0, :]
    return flat


def submodularity_witness(n: int, rank: np.ndarray) -> tuple[int, int, int]:
    """First (X, e, f) with r(X+e) + r(X+f) < r(X+e+f) + r(X), else (-1, -1, -1)."""
    r = rank.astype(np.int16)
    for f in range(n):
        for e in range(f):
            v = r.reshape(-1, 2, 1 << (f - e - 1), 2, 1 << e)
            bad = v[:, 0, :, 1, :] + v[:, 1, :, 0, :] < v[:, 1, :, 1, :] + v[:, 0, :, 0, :]
            if bad.any():
                hi, mid, lo = np.unravel_index(int(np.argmax(bad)), bad.shape)
                x = (int(hi) << (f + 1)) | (int(mid) << (e + 1)) | int(lo)
                return x, e, f
    return -1, -1, -1


def tutte_histogram(n: int, rank: np.ndarray, k: int) -> np.ndarray:
    """counts[a, b] = #{A : k - r(A) = a, |A| - r(A) = b}."""
    r = rank.astype(np.int64)
    pc = popcount_table(n).astype(np.int64)
    code = (k - r) * (n + 1) + (pc - r)
    counts = np.bincount(code, minlength=(k + 1) * (n + 1))
    return counts.reshape(k + 1, n + 1).astype(np.int64)


def uniform_restriction_table(n: int, rank: np.ndarray) -> np.ndarray:
    """True at A iff M|A is uniform, i.e. no dependent set of size <= r(A)."""
    big = np.int8(n + 1)
    pc = popcount_table(n)
    smallest = np.where(rank < pc, pc, big).astype(np.int8)
    for e in range(n):
        v = _split(smallest, e)
        np.minimum(v[:, 1, :], v[:, 0, :], out=v[:, 1, :])
    return smallest > rank
