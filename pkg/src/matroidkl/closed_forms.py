"""Explicit formulas for uniform, paving and sparse paving matroids.

Every function here is formula-only: no lattice work, no engine calls.
Rational intermediates use :class:`fractions.Fraction`; a result that does
not clear to an integer raises :class:`NonIntegerCoefficient`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .errors import (
    InvalidCuspidalParameters,
    InvalidHyperplaneSize,
    InvalidRank,
    LambdaOutOfRange,
    NonIntegerCoefficient,
)
from .polynomial import ONE, ONE_PLUS_T, IntPolynomial, binomial, catalan, multinomial


def _check_uniform(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise InvalidRank(f"need 1 <= k <= n, got k={k}, n={n}")


def _integral(values, what: str) -> IntPolynomial:
    out = []
    for i, v in enumerate(values):
        v = Fraction(v)
        if v.denominator != 1:
            raise NonIntegerCoefficient(f"{what}: coefficient of t^{i} is {v}")
        out.append(int(v))
    return IntPolynomial(out)


def lambda_bound(k: int, n: int) -> Fraction:
    """Largest admissible number of circuit-hyperplanes, as an exact rational."""
    return binomial(n, k) * min(Fraction(1, k + 1), Fraction(1, n - k + 1))


@dataclass(frozen=True)
class SparsePavingProfile:
    k: int
    n: int
    lam: int

    def __post_init__(self):
        _check_uniform(self.k, self.n)
        if self.lam < 0 or self.lam > lambda_bound(self.k, self.n):
            raise LambdaOutOfRange(
                f"lambda={self.lam} outside [0, {lambda_bound(self.k, self.n)}] for k={self.k}, n={self.n}"
            )

    @property
    def lambda_star(self) -> Fraction:
        return Fraction(self.lam, binomial(self.n, self.k))


# ---------------------------------------------------------------------------
# uniform matroids

def mu_uniform(k: int, n: int) -> int:
    _check_uniform(k, n)
    return (-1) ** k * binomial(n - 1, k - 1)


def q_uniform(k: int, n: int) -> IntPolynomial:
    _check_uniform(k, n)
    if k == n:
        return ONE
    c = binomial(n, k)
    coeffs = [
        c * Fraction((n - k) * (k - 2 * i), (n - k + i) * (n - i)) * binomial(k, i)
        for i in range((k - 1) // 2 + 1)
    ]
    return _integral(coeffs, f"Q of U{k},{n}")


def _y_uniform_term(k: int, n: int, i: int) -> int:
    return binomial(n, i) * binomial(n - i - 1, n - k)


def y_uniform(k: int, n: int) -> IntPolynomial:
    """Inverse Z-polynomial of U_{k,n}; rank 0 gives 1."""
    if k == 0 and n >= 0:
        return ONE
    _check_uniform(k, n)
    coeffs = [0] * (k + 1)
    low = range(k // 2 + 1)
    high = [k - i for i in range((k - 1) // 2 + 1)]
    assert not set(low) & set(high), "index overlap between the two halves"
    for i in low:
        coeffs[i] = _y_uniform_term(k, n, i)
    for i in range((k - 1) // 2 + 1):
        coeffs[k - i] = _y_uniform_term(k, n, i)
    return IntPolynomial(coeffs)


def y_uniform_corank1(k: int) -> IntPolynomial:
    if k < 1:
        raise InvalidRank(f"need k >= 1, got {k}")
    coeffs = [0] * (k + 1)
    for i in range(k // 2 + 1):
        coeffs[i] = (k - i) * binomial(k + 1, i)
    for i in range((k - 1) // 2 + 1):
        coeffs[k - i] = (k - i) * binomial(k + 1, i)
    return IntPolynomial(coeffs)


def z_uniform(k: int, n: int) -> IntPolynomial:
    _check_uniform(k, n)
    acc = [Fraction(0)] * (k + 1)

    def add(i: int, j: int, power: int) -> None:
        m = multinomial((1, i, j, n - k, k - i - j - 1))
        if not m:
            return
        w = Fraction((-1) ** (k - i + 1) * m, n - i - j)
        for a in range(i + 1):
            acc[power + a] += w * binomial(i, a)

    for j in range(k // 2 + 1):
        for i in range(k - 2 * j + 1):
            add(i, j, j)
    for j in range((k - 1) // 2 + 1):
        for i in range(k - 2 * j):
            add(i, j, k - i - j)
    return _integral(acc, f"Z of U{k},{n}")


# ---------------------------------------------------------------------------
# sparse paving and paving matroids

def sparse_correction(k: int) -> IntPolynomial:
    """(1+t)^k minus the central Catalan number at t^{k/2} for even k."""
    out = IntPolynomial.one_plus_t_power(k)
    if k % 2 == 0:
        out = out - IntPolynomial.monomial(k // 2, catalan(k // 2))
    return out


def y_sparse_paving(profile: SparsePavingProfile) -> IntPolynomial:
    k, n, lam = profile.k, profile.n, profile.lam
    return y_uniform(k, n) - sparse_correction(k).scale(lam)


def _central_coefficient_alt(profile: SparsePavingProfile) -> Fraction:
    # same coefficient written as the uniform part minus lambda*C(k,k/2), plus lambda*Catalan
    k, n = profile.k, profile.n
    h = k // 2
    return (
        binomial(n, k) * binomial(k, h) * (Fraction(h, n - h) - profile.lambda_star)
        + profile.lam * catalan(h)
    )


def sparse_paving_coefficient(profile: SparsePavingProfile, i: int) -> int:
    """[t^i] of the sparse paving Y, coefficient by coefficient."""
    k, n = profile.k, profile.n
    if not 0 <= i <= k:
        raise InvalidRank(f"coefficient index {i} outside 0..{k}")
    if 2 * i > k:
        i = k - i
    c = binomial(n, k) * binomial(k, i)
    lam = profile.lambda_star
    if 2 * i <= k - 1:
        val = c * (Fraction(k - i, n - i) - lam)
    else:
        val = c * Fraction(k, k + 2) * (Fraction(k + 2, 2 * n - k) - lam)
        alt = _central_coefficient_alt(profile)
        if alt != val:
            raise NonIntegerCoefficient(f"central coefficient forms disagree: {val} vs {alt}")
    if val.denominator != 1:
        raise NonIntegerCoefficient(f"[t^{i}] evaluates to {val}")
    return int(val)


def y_sparse_paving_by_coefficients(profile: SparsePavingProfile) -> IntPolynomial:
    return IntPolynomial(sparse_paving_coefficient(profile, i) for i in range(profile.k + 1))


def y_paving(k: int, n: int, lambda_by_size: Mapping[int, int]) -> IntPolynomial:
    """Y of a rank-k paving matroid on n elements with lambda_by_size[h] stressed hyperplanes of size h."""
    _check_uniform(k, n)
    out = y_uniform(k, n)
    for h, lam in sorted(lambda_by_size.items()):
        if h < k or h > n:
            raise InvalidHyperplaneSize(f"stressed hyperplane size {h} must lie in [{k}, {n}]")
        if lam:
            out = out - (y_uniform(k, h + 1) - ONE_PLUS_T * y_uniform(k - 1, h)).scale(lam)
    return out


def y_elementary_split(
    k: int,
    n: int,
    lambda_by_rank_size: Mapping[tuple[int, int], int],
    cuspidal_y: Callable[[int, int, int, int], IntPolynomial],
) -> IntPolynomial:
    """Y of an elementary split matroid from its counts of stressed subsets by (rank, size)."""
    _check_uniform(k, n)
    out = y_uniform(k, n)
    for (r, h), lam in sorted(lambda_by_rank_size.items()):
        if not (0 <= r <= h and 0 <= k - r <= n - h):
            raise InvalidCuspidalParameters(f"(r={r}, h={h}) invalid for k={k}, n={n}")
        if lam:
            split = _y_uniform_any(k - r, n - h) * _y_uniform_any(r, h)
            out = out - (cuspidal_y(r, k, h, n) - split).scale(lam)
    return out


def _y_uniform_any(k: int, n: int) -> IntPolynomial:
    # rank 0 (including the empty matroid) has Y = 1
    return ONE if k == 0 else y_uniform(k, n)


def sparse_correction_identity(k: int) -> tuple[IntPolynomial, IntPolynomial]:
    """Both sides of Y_{U_{k,k+1}} - (1+t) Y_{U_{k-1,k}} = sparse_correction(k)."""
    if k < 1:
        raise InvalidRank(f"need k >= 1, got {k}")
    prev = y_uniform_corank1(k - 1) if k >= 2 else ONE
    lhs = y_uniform_corank1(k) - ONE_PLUS_T * prev
    return lhs, sparse_correction(k)


__all__ = [
    "SparsePavingProfile",
    "lambda_bound",
    "mu_uniform",
    "q_uniform",
    "sparse_correction",
    "sparse_correction_identity",
    "sparse_paving_coefficient",
    "y_elementary_split",
    "y_paving",
    "y_sparse_paving",
    "y_sparse_paving_by_coefficients",
    "y_uniform",
    "y_uniform_corank1",
    "z_uniform",
]
