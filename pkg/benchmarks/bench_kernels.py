"""Time the numba and numpy subset-table kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--sizes 8 12 16] [--repeat 5] [--end-to-end]

``--end-to-end`` also times a small sparse paving scan once per backend, each
in a fresh interpreter so numba compilation is included.
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from matroidkl.kernels import numba_backend, numpy_backend
from matroidkl.matroid import sparse_paving_family, uniform


def _inputs(n: int):
    k = n // 2
    found = sparse_paving_family(k, n, 1, mode="greedy") if n <= 10 else []
    m = found[0] if found else uniform(k, n)
    return m.label or f"U{k},{n}", m.n, np.asarray(m.bases, dtype=np.int64), m.rank


def _best(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def run(sizes, repeat):
    rows = []
    for n in sizes:
        label, n, bases, k = _inputs(n)
        rank = numpy_backend.rank_table(n, bases)
        cases = {
            "rank_table": lambda b: b.rank_table(n, bases),
            "flat_table": lambda b: b.flat_table(n, rank),
            "submodularity": lambda b: b.submodularity_witness(n, rank),
            "tutte_histogram": lambda b: b.tutte_histogram(n, rank, k),
            "uniform_restriction": lambda b: b.uniform_restriction_table(n, rank),
        }
        for name, call in cases.items():
            a = call(numpy_backend)
            b = call(numba_backend)  # also triggers compilation outside the timed runs
            same = np.array_equal(np.asarray(a), np.asarray(b))
            t_np = _best(lambda: call(numpy_backend), repeat)
            t_nb = _best(lambda: call(numba_backend), repeat)
            rows.append((label, n, name, t_np, t_nb, same))
    return rows


_SCAN = (
    "import time; from matroidkl.analysis import scan_sparse_paving; "
    "t = time.perf_counter(); s = scan_sparse_paving((1, 4), (1, 8), per_lambda=5); "
    "print(s.total, time.perf_counter() - t)"
)


def end_to_end():
    for flag, name in (("0", "numba"), ("1", "numpy")):
        env = dict(os.environ, MATROIDKL_DISABLE_NUMBA=flag)
        t0 = time.perf_counter()
        out = subprocess.run([sys.executable, "-c", _SCAN], env=env, capture_output=True, text=True, check=True)
        wall = time.perf_counter() - t0
        total, scan = out.stdout.split()
        print(f"scan k<=4 n<=8 ({total} matroids) with {name}: scan {float(scan):.2f}s, process {wall:.2f}s")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 16])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--end-to-end", action="store_true")
    args = ap.parse_args(argv)
    if numba_backend is None:
        raise SystemExit("numba is not importable")
    print(f"{'matroid':<14}{'n':>3}  {'kernel':<20}{'numpy ms':>10}{'numba ms':>10}{'speedup':>9}  agree")
    for label, n, name, t_np, t_nb, same in run(args.sizes, args.repeat):
        print(f"{label:<14}{n:>3}  {name:<20}{t_np * 1e3:>10.2f}{t_nb * 1e3:>10.2f}{t_np / t_nb:>8.1f}x  {same}")
    if args.end_to_end:
        end_to_end()


if __name__ == "__main__":
    main()
