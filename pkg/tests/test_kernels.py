from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest

import oracles
from matroidkl import kernels
from matroidkl.kernels import numba_backend, numpy_backend
from matroidkl.matroid import cuspidal_matroid, direct_sum, uniform

POOL = [m for n in range(6) for m in oracles.all_matroids(n)][::3] + [
    uniform(4, 10),
    direct_sum(uniform(2, 5), uniform(3, 6)),
    cuspidal_matroid(2, 4, 4, 9),
]

pytestmark = pytest.mark.skipif(numba_backend is None, reason="numba not installed")


def _masks(m):
    return np.array(m.bases, dtype=np.int64)


def test_popcount():
    for n in (0, 1, 5, 11):
        a, b = numpy_backend.popcount_table(n), numba_backend.popcount_table(n)
        assert np.array_equal(a, b)
        assert [int(x) for x in a[:8]] == [bin(i).count("1") for i in range(min(8, 1 << n))]


def test_backends_agree_on_every_kernel():
    for m in POOL:
        n = m.n
        ra = numpy_backend.rank_table(n, _masks(m))
        rb = numba_backend.rank_table(n, _masks(m))
        assert np.array_equal(ra, rb)
        assert np.array_equal(numpy_backend.flat_table(n, ra), numba_backend.flat_table(n, ra))
        assert numpy_backend.submodularity_witness(n, ra) == numba_backend.submodularity_witness(n, ra)
        assert np.array_equal(numpy_backend.tutte_histogram(n, ra, m.rank), numba_backend.tutte_histogram(n, ra, m.rank))
        assert np.array_equal(
            numpy_backend.uniform_restriction_table(n, ra), numba_backend.uniform_restriction_table(n, ra)
        )


def test_submodularity_witness_on_broken_table():
    # down-closure of two disjoint pairs: not a matroid rank function
    bases = np.array([0b0011, 0b1100], dtype=np.int64)
    for backend in (numpy_backend, numba_backend):
        r = backend.rank_table(4, bases)
        x, e, f = backend.submodularity_witness(4, r)
        assert x >= 0
        assert int(r[x | 1 << e]) + int(r[x | 1 << f]) < int(r[x | 1 << e | 1 << f]) + int(r[x])


def test_tutte_histogram_counts_subsets():
    m = uniform(2, 4)
    h = kernels.tutte_histogram(4, m.rank_table, 2)
    assert h.sum() == 16
    assert h[2, 0] == 1 and h[0, 2] == 1 and h[0, 1] == 4


def test_uniform_restriction_table():
    m = direct_sum(uniform(1, 2), uniform(1, 1))
    t = kernels.uniform_restriction_table(3, m.rank_table)
    assert t[0b011]  # two parallel elements: U_{1,2}
    assert not t[0b111]


def test_env_flag_selects_numpy():
    env = dict(os.environ, MATROIDKL_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from matroidkl import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
    assert kernels.BACKEND == "numba" or os.environ.get("MATROIDKL_DISABLE_NUMBA")
