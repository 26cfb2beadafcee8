"""Hypothesis strategies producing valid matroids from a few generators."""
from __future__ import annotations

from hypothesis import strategies as st

from matroidkl.matroid import (
    Matroid,
    contraction,
    deletion,
    direct_sum,
    dual,
    from_bases,
    relabel,
    uniform,
)
from matroidkl.matroid import to_mask

import itertools


@st.composite
def uniforms(draw, max_n: int = 7) -> Matroid:
    n = draw(st.integers(0, max_n))
    k = draw(st.integers(0, n))
    return uniform(k, n)


@st.composite
def sparse_pavings(draw, max_n: int = 8) -> Matroid:
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, n - 1))
    ksets = [to_mask(c) for c in itertools.combinations(range(n), k)]
    order = draw(st.permutations(ksets))
    limit = draw(st.integers(0, len(ksets)))
    dropped: list[int] = []
    for s in order[:limit]:
        if all(bin(s & d).count("1") <= k - 2 for d in dropped):
            dropped.append(s)
    keep = [b for b in ksets if b not in set(dropped)]
    if not keep:
        return uniform(k, n)
    return from_bases(n, keep)


def _base(max_n: int):
    return st.one_of(uniforms(max_n), sparse_pavings(max_n))


@st.composite
def matroids(draw, max_n: int = 8) -> Matroid:
    """Uniform / sparse paving seeds combined with sums, minors, duals and relabelings."""
    m = draw(_base(min(max_n, 6)))
    for _ in range(draw(st.integers(0, 3))):
        op = draw(st.sampled_from(["sum", "delete", "contract", "dual", "relabel"]))
        if op == "sum" and m.n < max_n:
            m = direct_sum(m, draw(uniforms(max_n - m.n)))
        elif op in ("delete", "contract") and m.n:
            s = to_mask(draw(st.sets(st.integers(0, m.n - 1), max_size=2)))
            m = deletion(m, s) if op == "delete" else contraction(m, s)
        elif op == "dual":
            m = dual(m)
        elif op == "relabel" and m.n:
            m = relabel(m, draw(st.permutations(list(range(m.n)))))
    return m
