"""Exact integer polynomials and coefficient-sequence predicates."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DegreeExceedsCenter, NotPalindromic


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(int(x) for x in c)


class IntPolynomial:
    """Dense univariate polynomial over the integers, low degree first.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    def __reduce__(self):
        return (IntPolynomial, (self.coeffs,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def one_plus_t_power(cls, d: int) -> IntPolynomial:
        return cls(math.comb(d, i) for i in range(d + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other) -> IntPolynomial:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return self.scale(other)
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: int) -> IntPolynomial:
        return IntPolynomial(c * x for x in self.coeffs)

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> IntPolynomial:
        return cls(int(s) for s in items)


def _coerce(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial([p])
    raise TypeError(f"cannot use {type(p).__name__} as IntPolynomial")


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])
ONE_PLUS_T = IntPolynomial([1, 1])


# ---------------------------------------------------------------------------
# ring helpers with the names used across the package

def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p - q


def mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def scale(p: IntPolynomial, c: int) -> IntPolynomial:
    return p.scale(c)


def eval_at_integer(p: IntPolynomial, x: int) -> int:
    return p(x)


def reverse(p: IntPolynomial, d: int) -> IntPolynomial:
    """t**d * p(1/t)."""
    if p.degree > d:
        raise DegreeExceedsCenter(f"degree {p.degree} exceeds {d}")
    if p.is_zero():
        return p
    padded = list(p.coeffs) + [0] * (d - p.degree)
    return IntPolynomial(reversed(padded))


# ---------------------------------------------------------------------------
# predicates

def is_palindromic(p: IntPolynomial, d: int) -> bool:
    return p.degree <= d and reverse(p, d) == p


def is_nonnegative(p: IntPolynomial) -> bool:
    return all(c >= 0 for c in p.coeffs)


def is_unimodal(p: IntPolynomial) -> bool:
    c = p.coeffs
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i + 1 >= len(c)


def has_internal_zeros(p: IntPolynomial) -> bool:
    nz = [i for i, c in enumerate(p.coeffs) if c != 0]
    if not nz:
        return False
    return any(p.coeffs[j] == 0 for j in range(nz[0], nz[-1] + 1))


def is_log_concave(p: IntPolynomial) -> bool:
    c = p.coeffs
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


def is_log_concave_no_internal_zeros(p: IntPolynomial) -> bool:
    return is_log_concave(p) and not has_internal_zeros(p)


# ---------------------------------------------------------------------------
# gamma expansion

@dataclass(frozen=True)
class GammaVector:
    gammas: tuple[int, ...]
    center: int

    @property
    def is_gamma_positive(self) -> bool:
        return all(g >= 0 for g in self.gammas)

    def reassemble(self) -> IntPolynomial:
        out = ZERO
        for i, g in enumerate(self.gammas):
            out = out + IntPolynomial.one_plus_t_power(self.center - 2 * i).shift(i).scale(g)
        return out

    def as_polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.gammas)


def gamma_expansion(p: IntPolynomial, d: int) -> GammaVector:
    """Write p = sum_i g_i t^i (1+t)^(d-2i); p must be palindromic about d/2."""
    if not is_palindromic(p, d):
        raise NotPalindromic(f"{p} is not palindromic of degree {d}")
    rest = p
    gammas = []
    for i in range(d // 2 + 1):
        g = rest[i]
        gammas.append(g)
        if g:
            rest = rest - IntPolynomial.one_plus_t_power(d - 2 * i).shift(i).scale(g)
    assert rest.is_zero()
    return GammaVector(tuple(gammas), d)


# ---------------------------------------------------------------------------
# bivariate

class BiPolynomial:
    """Sparse polynomial in x, y: {(i, j): coefficient of x^i y^j}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for key, c in (coeffs or {}).items():
            if c:
                clean[(int(key[0]), int(key[1]))] = int(c)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPolynomial is immutable")

    def __reduce__(self):
        return (BiPolynomial, (self.coeffs,))

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"BiPolynomial({dict(sorted(self.coeffs.items()))})"

    def __add__(self, other: BiPolynomial) -> BiPolynomial:
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return BiPolynomial(out)

    def __mul__(self, other: BiPolynomial) -> BiPolynomial:
        out: dict[tuple[int, int], int] = {}
        for (i, j), a in self.coeffs.items():
            for (k, l), b in other.coeffs.items():
                out[(i + k, j + l)] = out.get((i + k, j + l), 0) + a * b
        return BiPolynomial(out)

    def __call__(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self.coeffs.items())

    def substitute(self, x: IntPolynomial, y: IntPolynomial) -> IntPolynomial:
        """Evaluate at univariate polynomials x(t), y(t)."""
        out = ZERO
        for (i, j), c in self.coeffs.items():
            out = out + (x**i * y**j).scale(c)
        return out

    def terms(self) -> list[tuple[int, int, int]]:
        return [(i, j, c) for (i, j), c in sorted(self.coeffs.items())]


# ---------------------------------------------------------------------------
# integer combinatorics

def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts: Iterable[int]) -> int:
    """n! / prod(a_i!) with n = sum(parts); 0 if any part is negative."""
    parts = list(parts)
    if any(a < 0 for a in parts):
        return 0
    out, total = 1, 0
    for a in parts:
        total += a
        out *= math.comb(total, a)
    return out


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)
