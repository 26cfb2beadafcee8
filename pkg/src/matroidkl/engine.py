"""Kazhdan-Lusztig-Stanley invariants of matroids over the lattice of flats.

For a loopless matroid M of rank r with lattice of flats L, everything is
computed from the records of the proper minors M|F and M/F (F a flat):

* mu and chi from the Moebius function of L,
* P from  t^r P(1/t) = sum_F chi_{M|F} P_{M/F},   deg P < r/2,
* Z  = sum_F t^{rk F} P_{M/F},
* Yhat solving  sum_F Z_{M|F} Yhat_{M/F} = 0  (r >= 1),
* Q from  Yhat = sum_F (-1)^{rk F} Q_{M|F} t^{r - rk F} mu_{M/F},
* Y  = (-1)^r Yhat.

Records are memoized by the canonical (dense, loopless) basis encoding.
Minor lattices are read off the parent's lattice intervals instead of
being recomputed from a rank table.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import (
    CrossCheckError,
    DegreeBoundViolation,
    HasLoops,
    InconsistentRecursion,
    LatticeTooLarge,
    NonnegativityViolation,
    RouteMismatch,
)
from .matroid import (
    FlatLattice,
    Matroid,
    _check_limit,
    _lattice_from_masks,
    _trusted,
    compress,
    elements,
    popcount,
    remove_loops,
)
from . import kernels
from .config import flat_limit
from .polynomial import ONE, ONE_PLUS_T, ZERO, BiPolynomial, IntPolynomial, is_nonnegative


@dataclass(frozen=True)
class Invariants:
    mu: int
    chi: IntPolynomial
    P: IntPolynomial
    Z: IntPolynomial
    Yhat: IntPolynomial
    Q: IntPolynomial
    rank: int

    @property
    def Y(self) -> IntPolynomial:
        return -self.Yhat if self.rank % 2 else self.Yhat


_RANK_ZERO = Invariants(1, ONE, ONE, ONE, ONE, ONE, 0)


class InvariantCache:
    """Key -> Invariants table; a second write of the same key must agree."""

    def __init__(self):
        self._data: dict[tuple, Invariants] = {}
        self._lock = threading.Lock()

    def get(self, key: tuple) -> Invariants | None:
        return self._data.get(key)

    def put(self, key: tuple, value: Invariants) -> Invariants:
        with self._lock:
            old = self._data.setdefault(key, value)
        if old is not value and old != value:
            raise CrossCheckError(f"cache collision with different values for key {key[:2]}")
        return old

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: tuple) -> bool:
        return key in self._data

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


# ---------------------------------------------------------------------------
# minors from lattice intervals

def _contraction_bases(m: Matroid, f: int, rf: int) -> tuple[int, ...]:
    rest = m.ground & ~f
    return tuple(sorted({compress(b & rest, rest) for b in m.bases if popcount(b & f) == rf}))


def _restriction_bases(m: Matroid, f: int, rf: int) -> tuple[int, ...]:
    return tuple(sorted({compress(b & f, f) for b in m.bases if popcount(b & f) == rf}))


def _seed_lattice(m: Matroid, lat: FlatLattice) -> Matroid:
    m.__dict__["lattice"] = lat
    return m


def interval_contraction(m: Matroid, f: int) -> Matroid:
    """M/F for the flat with index ``f`` in ``m.lattice``.

    The result's lattice is the interval [F, E] of the parent lattice,
    re-indexed, so no rank table is built for it.
    """
    lat = m.lattice
    fmask, rf = lat.flats[f]
    rest = m.ground & ~fmask
    out = _trusted(m.n - popcount(fmask), m.rank - rf, _contraction_bases(m, fmask, rf))
    upper = [(compress(g & rest, rest), rg - rf) for g, rg in lat.flats if g & fmask == fmask]
    return _seed_lattice(out, _lattice_from_masks(*zip(*upper)))


def interval_restriction(m: Matroid, f: int) -> Matroid:
    """M|F for the flat with index ``f``; its lattice is the interval [bottom, F]."""
    lat = m.lattice
    fmask, rf = lat.flats[f]
    out = _trusted(popcount(fmask), rf, _restriction_bases(m, fmask, rf))
    lower = [(compress(g, fmask), rg) for g, rg in lat.flats if g & ~fmask == 0]
    return _seed_lattice(out, _lattice_from_masks(*zip(*lower)))


# ---------------------------------------------------------------------------

class KLEngine:
    def __init__(self, cache: InvariantCache | None = None):
        self.cache = cache if cache is not None else InvariantCache()

    def invariants(self, m: Matroid) -> Invariants:
        """Full record of a loopless matroid."""
        if m.loops:
            raise HasLoops(f"{m!r} has loops {elements(m.loops)}")
        rec = self.cache.get(m.key)
        if rec is None:
            rec = self.cache.put(m.key, self._compute(m))
        return rec

    # -- minors, looked up in the cache before any lattice work -------------

    def _contraction_record(self, m: Matroid, lat: FlatLattice, j: int) -> Invariants:
        fmask, rf = lat.flats[j]
        key = (m.n - popcount(fmask), m.rank - rf, _contraction_bases(m, fmask, rf))
        rec = self.cache.get(key)
        if rec is None:
            rec = self.invariants(interval_contraction(m, j))
        return rec

    def _restriction_record(self, m: Matroid, lat: FlatLattice, j: int) -> Invariants:
        fmask, rf = lat.flats[j]
        key = (popcount(fmask), rf, _restriction_bases(m, fmask, rf))
        rec = self.cache.get(key)
        if rec is None:
            rec = self.invariants(interval_restriction(m, j))
        return rec

    def _compute(self, m: Matroid) -> Invariants:
        r = m.rank
        if r == 0:
            return _RANK_ZERO
        lat = m.lattice
        size = len(lat)
        if size > flat_limit():
            raise LatticeTooLarge(f"{m!r} has {size} flats, above the limit {flat_limit()}")
        ranks = lat.ranks
        top = lat.top

        mu_bot = [0] * size
        mu_top = [0] * size
        mu_bot[0] = 1
        mu_top[top] = 1
        below = [lat.below(j).tolist() for j in range(size)]
        for j in range(1, size):
            mu_bot[j] = -sum(mu_bot[i] for i in below[j][:-1])
        above: list[list[int]] = [[] for _ in range(size)]
        for j in range(size):
            for i in below[j][:-1]:
                above[i].append(j)
        for i in range(top - 1, -1, -1):
            mu_top[i] = -sum(mu_top[j] for j in above[i])

        chi_c = [0] * (r + 1)
        for j in range(size):
            chi_c[r - ranks[j]] += mu_bot[j]
        chi = IntPolynomial(chi_c)

        contr = [None] + [self._contraction_record(m, lat, j) for j in range(1, size)]
        restr = [self._restriction_record(m, lat, j) for j in range(size - 1)] + [None]

        # P: reverse(P) - P = S, read the low half off S
        s = chi
        for j in range(1, top):
            s = s + restr[j].chi * contr[j].P
        p = IntPolynomial(-s[i] for i in range((r + 1) // 2))
        if s + p != _reverse(p, r):
            raise InconsistentRecursion(f"KL recursion has no solution for {m!r}")

        z = p + IntPolynomial.monomial(r)
        for j in range(1, top):
            z = z + contr[j].P.shift(ranks[j])

        yhat = -z
        for j in range(1, top):
            yhat = yhat - restr[j].Z * contr[j].Yhat

        acc = yhat
        for j in range(top):
            term = restr[j].Q.shift(r - ranks[j]).scale(mu_top[j])
            acc = acc - term if ranks[j] % 2 == 0 else acc + term
        q = -acc if r % 2 else acc
        if not is_nonnegative(q):
            raise NonnegativityViolation(f"inverse KL polynomial {q} of {m!r} has a negative coefficient")
        if 2 * q.degree >= r:
            raise DegreeBoundViolation(f"inverse KL polynomial {q} of {m!r} has degree >= rk/2")

        return Invariants(mu_bot[top], chi, p, z, yhat, q, r)


def _reverse(p: IntPolynomial, d: int) -> IntPolynomial:
    return IntPolynomial(reversed(list(p.coeffs) + [0] * (d + 1 - len(p.coeffs))))


default_engine = KLEngine()


def _loopless(m: Matroid) -> Matroid:
    if m.loops:
        raise HasLoops(f"{m!r} has loops {elements(m.loops)}; remove them first")
    return m


# ---------------------------------------------------------------------------
# public operations

def tutte(m: Matroid) -> BiPolynomial:
    """Tutte polynomial by summing over all 2**n subsets of the raw ground set."""
    _check_limit(m.n, "tutte")
    hist = kernels.tutte_histogram(m.n, m.rank_table, m.rank)
    out: dict[tuple[int, int], int] = {}
    # (x-1)^a (y-1)^b expanded binomially
    from math import comb
    for a in range(hist.shape[0]):
        for b in range(hist.shape[1]):
            c = int(hist[a, b])
            if not c:
                continue
            for i in range(a + 1):
                for j in range(b + 1):
                    sign = -1 if (a - i + b - j) % 2 else 1
                    out[(i, j)] = out.get((i, j), 0) + sign * c * comb(a, i) * comb(b, j)
    return BiPolynomial(out)


def characteristic_via_tutte(m: Matroid) -> IntPolynomial:
    """(-1)^rk T(1-t, 0)."""
    one_minus_t = IntPolynomial([1, -1])
    val = tutte(m).substitute(one_minus_t, ZERO)
    return -val if m.rank % 2 else val


def characteristic_via_flats(m: Matroid, engine: KLEngine | None = None) -> IntPolynomial:
    return (engine or default_engine).invariants(_loopless(m)).chi


def characteristic(m: Matroid, engine: KLEngine | None = None) -> IntPolynomial:
    """Characteristic polynomial, computed by both routes and cross-checked."""
    by_flats = characteristic_via_flats(m, engine)
    by_tutte = characteristic_via_tutte(m)
    if by_flats != by_tutte:
        raise RouteMismatch(f"chi via flats {by_flats} != chi via Tutte {by_tutte} for {m!r}")
    return by_flats


def mobius_invariant(m: Matroid, engine: KLEngine | None = None) -> int:
    return (engine or default_engine).invariants(_loopless(m)).mu


def kl_p(m: Matroid, engine: KLEngine | None = None) -> IntPolynomial:
    return (engine or default_engine).invariants(_loopless(m)).P


def z_poly(m: Matroid, engine: KLEngine | None = None) -> IntPolynomial:
    return (engine or default_engine).invariants(_loopless(m)).Z


def inverse_kl_q(m: Matroid, engine: KLEngine | None = None) -> IntPolynomial:
    return (engine or default_engine).invariants(_loopless(m)).Q


def y_hat(m: Matroid, engine: KLEngine | None = None) -> IntPolynomial:
    """Convolution inverse of Z; loops are deleted first."""
    return (engine or default_engine).invariants(remove_loops(m)).Yhat


def y_poly(m: Matroid, engine: KLEngine | None = None) -> IntPolynomial:
    """Inverse Z-polynomial (-1)^rk Yhat; loops are deleted first."""
    return (engine or default_engine).invariants(remove_loops(m)).Y


def eq2_residual(m: Matroid, engine: KLEngine | None = None) -> IntPolynomial:
    """Yhat_M - sum_F (-1)^{rk F} Q_{M|F} t^{rk(M/F)} mu_{M/F}, using minors built directly."""
    from .matroid import contraction, restriction

    eng = engine or default_engine
    m = _loopless(m)
    total = ZERO
    for f, rf in m.lattice.flats:
        q = eng.invariants(restriction(m, f)).Q
        mu = eng.invariants(contraction(m, f)).mu
        term = q.shift(m.rank - rf).scale(mu)
        total = total + (term if rf % 2 == 0 else -term)
    return eng.invariants(m).Yhat - total


__all__ = [
    "InvariantCache",
    "Invariants",
    "KLEngine",
    "ONE_PLUS_T",
    "characteristic",
    "characteristic_via_flats",
    "characteristic_via_tutte",
    "default_engine",
    "eq2_residual",
    "interval_contraction",
    "interval_restriction",
    "inverse_kl_q",
    "kl_p",
    "mobius_invariant",
    "tutte",
    "y_hat",
    "y_poly",
    "z_poly",
]
