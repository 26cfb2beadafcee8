"""Matroids given by their bases, encoded as bitmasks over ``0..n-1``."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .config import ground_set_limit
from .errors import (
    EmptyBases,
    ExchangeAxiomViolation,
    GroundSetTooLarge,
    Infeasible,
    InvalidCuspidalParameters,
    InvalidRank,
    MatroidInputError,
    MixedCardinality,
    NotStressed,
)

# Above this size single rank queries scan the bases instead of building a 2**n table.
_TABLE_THRESHOLD = 16


# ---------------------------------------------------------------------------
# bitmask helpers

def to_mask(subset: Iterable[int] | int) -> int:
    if isinstance(subset, (int, np.integer)):
        return int(subset)
    m = 0
    for e in subset:
        m |= 1 << int(e)
    return m


def elements(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def compress(mask: int, keep: int) -> int:
    """Re-index ``mask`` onto the set bits of ``keep``, packed densely from 0."""
    out = 0
    j = 0
    while keep:
        low = keep & -keep
        if mask & low:
            out |= 1 << j
        j += 1
        keep ^= low
    return out


def _check_limit(n: int, what: str) -> None:
    limit = ground_set_limit()
    if n > limit:
        raise GroundSetTooLarge(f"{what}: ground set of size {n} exceeds limit {limit}")


# ---------------------------------------------------------------------------
# types

@dataclass(frozen=True)
class Matroid:
    """A matroid on ``0..n-1``; ``bases`` is a sorted tuple of bitmasks.

    Build instances with :func:`from_bases` (validated) or the named
    constructors; the dataclass constructor itself does not check axioms.
    """

    n: int
    rank: int
    bases: tuple[int, ...]
    label: str | None = field(default=None, compare=False)

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @property
    def key(self) -> tuple:
        return (self.n, self.rank, self.bases)

    @cached_property
    def rank_table(self) -> np.ndarray:
        _check_limit(self.n, "rank table")
        return kernels.rank_table(self.n, self.bases)

    @cached_property
    def lattice(self) -> FlatLattice:
        return _build_lattice(self)

    @cached_property
    def loops(self) -> int:
        covered = 0
        for b in self.bases:
            covered |= b
        return self.ground & ~covered

    @cached_property
    def basis_set(self) -> frozenset[int]:
        return frozenset(self.bases)

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"<Matroid{name} n={self.n} rank={self.rank} |B|={len(self.bases)}>"

    def with_label(self, label: str | None) -> Matroid:
        m = Matroid(self.n, self.rank, self.bases, label)
        for attr in ("rank_table", "lattice"):
            if attr in self.__dict__:
                m.__dict__[attr] = self.__dict__[attr]
        return m


@dataclass(frozen=True)
class FlatLattice:
    """All flats of a matroid, sorted by (rank, mask)."""

    flats: tuple[tuple[int, int], ...]
    index_of: dict[int, int] = field(repr=False, compare=False, hash=False)
    top: int
    bottom: int

    @cached_property
    def masks(self) -> np.ndarray:
        return np.array([f for f, _ in self.flats], dtype=np.int64)

    @cached_property
    def ranks(self) -> list[int]:
        return [r for _, r in self.flats]

    def __len__(self) -> int:
        return len(self.flats)

    def below(self, i: int) -> np.ndarray:
        """Indices of flats contained in flat i (including i)."""
        f = self.flats[i][0]
        return np.flatnonzero((self.masks & ~f) == 0)

    def above(self, i: int) -> np.ndarray:
        """Indices of flats containing flat i (including i)."""
        f = self.flats[i][0]
        return np.flatnonzero((self.masks & f) == f)

    @cached_property
    def containment(self) -> np.ndarray:
        """Boolean matrix: [i, j] true iff flat i is a subset of flat j."""
        m = self.masks
        return (m[:, None] & ~m[None, :]) == 0

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for j, (_, rj) in enumerate(self.flats):
            for i in self.below(j):
                if self.flats[i][1] == rj - 1:
                    out.append((int(i), j))
        return out

    def meet(self, i: int, j: int) -> int:
        return self.index_of[self.flats[i][0] & self.flats[j][0]]


@dataclass(frozen=True)
class StressedSubset:
    mask: int
    subset_rank: int
    subset_size: int
    cusp_nonempty: bool


def _lattice_from_masks(masks: Iterable[int], ranks: Iterable[int]) -> FlatLattice:
    flats = tuple(sorted(zip((int(m) for m in masks), (int(r) for r in ranks)), key=lambda fr: (fr[1], fr[0])))
    index_of = {f: i for i, (f, _) in enumerate(flats)}
    return FlatLattice(flats, index_of, top=len(flats) - 1, bottom=0)


def _build_lattice(m: Matroid) -> FlatLattice:
    _check_limit(m.n, "flats")
    rank = m.rank_table
    masks = np.flatnonzero(kernels.flat_table(m.n, rank))
    return _lattice_from_masks(masks.tolist(), rank[masks].tolist())


# ---------------------------------------------------------------------------
# construction and validation

def _trusted(n: int, rank: int, bases: Iterable[int], label: str | None = None) -> Matroid:
    return Matroid(n, rank, tuple(sorted(set(bases))), label)


def exchange_witness(n: int, bases: Sequence[int]) -> tuple[int, int] | None:
    """Brute-force basis exchange check; returns a violating (A, B) pair or None."""
    bset = set(bases)
    for a_mask in bases:
        for b_mask in bases:
            if a_mask == b_mask:
                continue
            only_b = elements(b_mask & ~a_mask)
            for a in elements(a_mask & ~b_mask):
                base = a_mask & ~(1 << a)
                if not any((base | (1 << b)) in bset for b in only_b):
                    return a_mask, b_mask
    return None


def from_bases(n: int, bases: Iterable[Iterable[int] | int], label: str | None = None) -> Matroid:
    """Validated constructor; subsets may be given as element iterables or bitmasks."""
    if n < 0:
        raise InvalidRank(f"ground set size must be non-negative, got {n}")
    masks = set()
    for b in bases:
        m = to_mask(b)
        if m < 0 or m >> n:
            raise MatroidInputError(f"basis {elements(m) if m >= 0 else m} not inside 0..{n - 1}")
        masks.add(m)
    if not masks:
        raise EmptyBases("a matroid needs at least one basis")
    sizes = {popcount(m) for m in masks}
    if len(sizes) != 1:
        raise MixedCardinality(f"bases have different sizes {sorted(sizes)}")
    ordered = sorted(masks)
    _validate_exchange(n, ordered)
    return Matroid(n, sizes.pop(), tuple(ordered), label)


def _validate_exchange(n: int, bases: list[int]) -> None:
    if len(bases) <= 64 or n > min(ground_set_limit(), 24):
        witness = exchange_witness(n, bases)
    else:
        # down-closure rank is a matroid rank function iff it is locally submodular
        x, _, _ = kernels.submodularity_witness(n, kernels.rank_table(n, bases))
        witness = None if x < 0 else exchange_witness(n, bases)
    if witness is not None:
        a, b = witness
        raise ExchangeAxiomViolation(
            f"exchange axiom fails for bases {elements(a)} and {elements(b)}", witness
        )


def uniform(k: int, n: int) -> Matroid:
    if not 0 <= k <= n:
        raise InvalidRank(f"U_{{{k},{n}}} needs 0 <= k <= n")
    bases = [to_mask(c) for c in itertools.combinations(range(n), k)]
    return _trusted(n, k, bases, f"U{k},{n}")


def boolean_matroid(n: int) -> Matroid:
    return uniform(n, n).with_label(f"B{n}")


def is_uniform(m: Matroid) -> bool:
    return len(m.bases) == math.comb(m.n, m.rank)


# ---------------------------------------------------------------------------
# rank and closure

def rank_of(m: Matroid, s: Iterable[int] | int) -> int:
    s = to_mask(s)
    if "rank_table" in m.__dict__ or m.n <= _TABLE_THRESHOLD:
        return int(m.rank_table[s])
    return max(popcount(s & b) for b in m.bases)


def closure(m: Matroid, s: Iterable[int] | int) -> int:
    s = to_mask(s)
    r = rank_of(m, s)
    out = s
    for e in elements(m.ground & ~s):
        if rank_of(m, s | (1 << e)) == r:
            out |= 1 << e
    return out


def flats(m: Matroid) -> FlatLattice:
    return m.lattice


def is_flat(m: Matroid, s: Iterable[int] | int) -> bool:
    s = to_mask(s)
    return closure(m, s) == s


# ---------------------------------------------------------------------------
# minors and duality

def restriction(m: Matroid, s: Iterable[int] | int) -> Matroid:
    s = to_mask(s) & m.ground
    r = max(popcount(b & s) for b in m.bases)
    bases = {compress(b & s, s) for b in m.bases if popcount(b & s) == r}
    return _trusted(popcount(s), r, bases)


def contraction(m: Matroid, s: Iterable[int] | int) -> Matroid:
    s = to_mask(s) & m.ground
    rest = m.ground & ~s
    r = max(popcount(b & s) for b in m.bases)
    bases = {compress(b & rest, rest) for b in m.bases if popcount(b & s) == r}
    return _trusted(popcount(rest), m.rank - r, bases)


def deletion(m: Matroid, s: Iterable[int] | int) -> Matroid:
    return restriction(m, m.ground & ~to_mask(s))


def minor(m: Matroid, contract: int, restrict_to: int) -> Matroid:
    """(M | restrict_to) / contract, with contract a subset of restrict_to."""
    r = restriction(m, restrict_to)
    return contraction(r, compress(contract, restrict_to))


def dual(m: Matroid) -> Matroid:
    g = m.ground
    return _trusted(m.n, m.n - m.rank, (g & ~b for b in m.bases))


def remove_loops(m: Matroid) -> Matroid:
    if not m.loops:
        return m
    return deletion(m, m.loops)


def parallel_classes(m: Matroid) -> list[int]:
    """Rank-1 flats of the loopless part, i.e. the parallel classes."""
    loopless = m.ground & ~m.loops
    classes = []
    seen = 0
    for e in elements(loopless):
        if seen >> e & 1:
            continue
        cls = 1 << e
        for f in elements(loopless & ~((1 << (e + 1)) - 1)):
            if rank_of(m, (1 << e) | (1 << f)) == 1:
                cls |= 1 << f
        seen |= cls
        classes.append(cls)
    return classes


def simplify(m: Matroid) -> Matroid:
    reps = 0
    for cls in parallel_classes(m):
        reps |= cls & -cls
    return restriction(m, reps)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    shift = m1.n
    bases = [b1 | (b2 << shift) for b1 in m1.bases for b2 in m2.bases]
    label = f"{m1.label}+{m2.label}" if m1.label and m2.label else None
    return _trusted(m1.n + m2.n, m1.rank + m2.rank, bases, label)


def relabel(m: Matroid, perm: Sequence[int]) -> Matroid:
    """Image of m under element map e -> perm[e]."""
    def move(b: int) -> int:
        return sum(1 << perm[e] for e in elements(b))
    return _trusted(m.n, m.rank, (move(b) for b in m.bases), m.label)


# ---------------------------------------------------------------------------
# paving structure

def _all_independent_of_size(m: Matroid, size: int) -> bool:
    if size <= 0:
        return True
    if size > m.rank:
        return False
    subs = set()
    for b in m.bases:
        for drop in itertools.combinations(elements(b), m.rank - size):
            subs.add(b & ~to_mask(drop))
    return len(subs) == math.comb(m.n, size)


def is_paving(m: Matroid) -> bool:
    return _all_independent_of_size(m, m.rank - 1)


def is_sparse_paving(m: Matroid) -> bool:
    return is_paving(m) and is_paving(dual(m))


def circuit_hyperplanes(m: Matroid) -> list[int]:
    """Flats of rank rk-1 that are circuits (size rk, every proper subset independent)."""
    k = m.rank
    if k == 0:
        return []
    out = []
    for f, r in m.lattice.flats:
        if r != k - 1 or popcount(f) != k:
            continue
        if all(rank_of(m, f & ~(1 << e)) == k - 1 for e in elements(f)):
            out.append(f)
    return out


def _stressed_table(m: Matroid) -> np.ndarray:
    rank = m.rank_table
    restr_uniform = kernels.uniform_restriction_table(m.n, rank)
    # M/A uniform  <=>  (M/A)* = M*|(E-A) uniform
    pc = kernels.popcount_table(m.n)
    dual_rank = (pc.astype(np.int16) - m.rank + rank[::-1].astype(np.int16)).astype(np.int8)
    dual_uniform = kernels.uniform_restriction_table(m.n, dual_rank)
    return restr_uniform & dual_uniform[::-1]


def _cusp_nonempty(n: int, k: int, r: int, h: int) -> bool:
    return r + 1 <= min(h, k) and k - (r + 1) <= n - h


def is_stressed(m: Matroid, a: Iterable[int] | int) -> bool:
    a = to_mask(a)
    r = restriction(m, a)
    c = contraction(m, a)
    return is_uniform(r) and is_uniform(c)


def stressed_subsets(m: Matroid) -> list[StressedSubset]:
    _check_limit(m.n, "stressed subsets")
    table = _stressed_table(m)
    rank = m.rank_table
    out = []
    for a in np.flatnonzero(table).tolist():
        r, h = int(rank[a]), popcount(a)
        out.append(StressedSubset(a, r, h, _cusp_nonempty(m.n, m.rank, r, h)))
    return out


def cusp(m: Matroid, a: Iterable[int] | int) -> list[int]:
    a = to_mask(a)
    if not is_stressed(m, a):
        raise NotStressed(f"{elements(a)} is not stressed")
    r = rank_of(m, a)
    return [
        s for s in (to_mask(c) for c in itertools.combinations(range(m.n), m.rank))
        if popcount(s & a) >= r + 1
    ]


def relax(m: Matroid, a: Iterable[int] | int) -> Matroid:
    extra = cusp(m, a)
    return from_bases(m.n, list(m.bases) + extra, label=m.label and f"Rel({m.label})")


def cuspidal_matroid(r: int, k: int, h: int, n: int) -> Matroid:
    """Relaxation of U_{k-r,n-h} (+) U_{r,h} at the ground set of the second summand."""
    if not (0 <= r <= h and 0 <= k - r <= n - h):
        raise InvalidCuspidalParameters(f"need 0<=r<=h and 0<=k-r<=n-h, got r={r} k={k} h={h} n={n}")
    base = direct_sum(uniform(k - r, n - h), uniform(r, h))
    summand = ((1 << h) - 1) << (n - h)
    return relax(base, summand).with_label(f"Lambda{r},{k},{h},{n}")


# ---------------------------------------------------------------------------
# sparse paving generation

def sparse_paving_lambda_bound(k: int, n: int) -> int:
    """Largest lambda allowed by lambda / C(n,k) <= min(1/(k+1), 1/(n-k+1))."""
    return math.floor(math.comb(n, k) * min(Fraction(1, k + 1), Fraction(1, n - k + 1)))


def johnson_bound(n: int, k: int) -> int:
    """Upper bound on k-subsets of an n-set pairwise meeting in at most k-2 points."""
    if k <= 0 or n < k:
        return 1 if 0 <= k <= n else 0
    if k == 1:
        return 1
    return (n * johnson_bound(n - 1, k - 1)) // k


def _nonbasis_families(k: int, n: int, lam: int, first_fixed: bool):
    """Lexicographic lam-families of k-sets pairwise meeting in <= k-2 points."""
    cands = [to_mask(c) for c in itertools.combinations(range(n), k)]
    chosen: list[int] = []

    def rec(start: int):
        if len(chosen) == lam:
            yield tuple(chosen)
            return
        need = lam - len(chosen)
        for idx in range(start, len(cands) - need + 1):
            s = cands[idx]
            if all(popcount(s & c) <= k - 2 for c in chosen):
                chosen.append(s)
                yield from rec(idx + 1)
                chosen.pop()
            if first_fixed and not chosen:
                return

    yield from rec(0)


def sparse_paving_family(k: int, n: int, lam: int, mode: str = "all", budget: int = 10_000) -> list[Matroid]:
    """Sparse paving matroids obtained from U_{k,n} by dropping ``lam`` k-subsets.

    ``mode="all"`` lists every valid family (lexicographic, at most ``budget``);
    ``mode="greedy"`` returns the first family found by depth-first search with
    the first non-basis fixed to {0..k-1}, or an empty list when none exists.
    """
    if not 1 <= k <= n - 1:
        raise InvalidRank(f"need 1 <= k <= n-1, got k={k} n={n}")
    if lam < 0 or lam > sparse_paving_lambda_bound(k, n):
        raise Infeasible(
            f"lambda={lam} exceeds C({n},{k})*min(1/{k + 1},1/{n - k + 1}) = {sparse_paving_lambda_bound(k, n)}"
        )
    if mode not in ("all", "greedy"):
        raise ValueError(f"unknown mode {mode!r}")
    if lam > johnson_bound(n, k):
        return []
    full = uniform(k, n)
    greedy = mode == "greedy"
    out = []
    for fam in _nonbasis_families(k, n, lam, first_fixed=greedy):
        dropped = set(fam)
        m = from_bases(n, [b for b in full.bases if b not in dropped], label=f"SP{k},{n},{lam}")
        if not is_sparse_paving(m):
            continue
        out.append(m)
        if greedy or len(out) >= budget:
            break
    return out
