"""numba versions of the subset-table kernels (same contracts as ``_numpy``)."""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def popcount_table(n):
    size = 1 << n
    pc = np.zeros(size, dtype=np.int8)
    for m in range(1, size):
        pc[m] = pc[m >> 1] + (m & 1)
    return pc


@njit(cache=True)
def rank_table(n, bases):
    size = 1 << n
    ind = np.zeros(size, dtype=np.bool_)
    for b in bases:
        ind[b] = True
    for e in range(n):
        bit = 1 << e
        for m in range(size):
            if (m & bit) == 0 and ind[m | bit]:
                ind[m] = True
    pc = popcount_table(n)
    rank = np.zeros(size, dtype=np.int8)
    for m in range(size):
        if ind[m]:
            rank[m] = pc[m]
    for e in range(n):
        bit = 1 << e
        for m in range(size):
            if (m & bit) != 0 and rank[m ^ bit] > rank[m]:
                rank[m] = rank[m ^ bit]
    return rank


@njit(cache=True)
def flat_table(n, rank):
    size = 1 << n
    flat = np.ones(size, dtype=np.bool_)
    for m in range(size):
        r = rank[m]
        for e in range(n):
            bit = 1 << e
            if (m & bit) == 0 and rank[m | bit] == r:
                flat[m] = False
                break
    return flat


@njit(cache=True)
def _submodularity_witness(n, rank):
    size = 1 << n
    for f in range(n):
        fb = 1 << f
        for e in range(f):
            eb = 1 << e
            for x in range(size):
                if (x & fb) != 0 or (x & eb) != 0:
                    continue
                lhs = np.int16(rank[x | eb]) + np.int16(rank[x | fb])
                rhs = np.int16(rank[x | eb | fb]) + np.int16(rank[x])
                if lhs < rhs:
                    return x, e, f
    return -1, -1, -1


def submodularity_witness(n, rank):
    x, e, f = _submodularity_witness(n, rank)
    return int(x), int(e), int(f)


@njit(cache=True)
def tutte_histogram(n, rank, k):
    counts = np.zeros((k + 1, n + 1), dtype=np.int64)
    pc = popcount_table(n)
    for m in range(1 << n):
        r = rank[m]
        counts[k - r, pc[m] - r] += 1
    return counts


@njit(cache=True)
def uniform_restriction_table(n, rank):
    size = 1 << n
    pc = popcount_table(n)
    smallest = np.empty(size, dtype=np.int8)
    for m in range(size):
        smallest[m] = pc[m] if rank[m] < pc[m] else n + 1
    for e in range(n):
        bit = 1 << e
        for m in range(size):
            if (m & bit) != 0 and smallest[m ^ bit] < smallest[m]:
                smallest[m] = smallest[m ^ bit]
    out = np.empty(size, dtype=np.bool_)
    for m in range(size):
        out[m] = smallest[m] > rank[m]
    return out
