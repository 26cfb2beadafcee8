from __future__ import annotations

from fractions import Fraction

import pytest

from matroidkl.closed_forms import (
    SparsePavingProfile,
    lambda_bound,
    mu_uniform,
    q_uniform,
    sparse_correction,
    sparse_correction_identity,
    sparse_paving_coefficient,
    y_elementary_split,
    y_paving,
    y_sparse_paving,
    y_sparse_paving_by_coefficients,
    y_uniform,
    y_uniform_corank1,
    z_uniform,
)
from matroidkl.engine import default_engine, inverse_kl_q, mobius_invariant, y_poly, z_poly
from matroidkl.errors import (
    InvalidCuspidalParameters,
    InvalidHyperplaneSize,
    InvalidRank,
    LambdaOutOfRange,
)
from matroidkl.matroid import (
    boolean_matroid,
    circuit_hyperplanes,
    cuspidal_matroid,
    from_bases,
    sparse_paving_family,
    sparse_paving_lambda_bound,
    stressed_subsets,
    uniform,
)
from matroidkl.polynomial import ONE, ONE_PLUS_T, IntPolynomial, binomial, catalan, is_palindromic

P = IntPolynomial


def test_mu_uniform():
    assert mu_uniform(2, 4) == 3
    assert all(mu_uniform(1, n) == -1 for n in range(1, 8))
    assert all(mu_uniform(n, n) == (-1) ** n for n in range(1, 8))
    with pytest.raises(InvalidRank):
        mu_uniform(0, 3)


def test_q_uniform():
    assert all(q_uniform(n, n) == ONE for n in range(1, 8))
    assert q_uniform(2, 4) == P([3])
    assert q_uniform(1, 2) == ONE
    assert q_uniform(4, 5) == P([4, 5])


def test_y_uniform():
    assert y_uniform(4, 5) == P([4, 15, 20, 15, 4])
    assert all(y_uniform(1, n) == ONE_PLUS_T for n in range(1, 9))
    assert y_uniform(2, 4) == P([3, 4, 3])
    assert y_uniform(0, 3) == ONE
    for n in range(1, 12):
        for k in range(1, n + 1):
            y = y_uniform(k, n)
            assert y.degree == k and is_palindromic(y, k)
    with pytest.raises(InvalidRank):
        y_uniform(4, 3)


def test_y_uniform_corank1():
    assert y_uniform_corank1(2) == P([2, 3, 2])
    assert y_uniform_corank1(1) == ONE_PLUS_T
    assert y_uniform_corank1(4)[4] == 4
    for k in range(1, 15):
        assert y_uniform_corank1(k) == y_uniform(k, k + 1)


def test_z_uniform():
    assert z_uniform(2, 4) == P([1, 4, 1])
    assert z_uniform(1, 2) == ONE_PLUS_T
    for n in range(1, 9):
        assert z_uniform(n, n) == ONE_PLUS_T ** n


def test_uniform_closed_forms_match_engine():
    for n in range(1, 9):
        for k in range(1, n + 1):
            u = uniform(k, n)
            assert y_poly(u) == y_uniform(k, n)
            assert z_poly(u) == z_uniform(k, n)
            assert inverse_kl_q(u) == q_uniform(k, n)
            assert mobius_invariant(u) == mu_uniform(k, n)


def test_profile_bounds():
    assert lambda_bound(2, 4) == 2
    SparsePavingProfile(2, 4, 2)
    with pytest.raises(LambdaOutOfRange):
        SparsePavingProfile(2, 4, 3)
    with pytest.raises(LambdaOutOfRange):
        SparsePavingProfile(2, 4, -1)
    assert SparsePavingProfile(3, 6, 2).lambda_star == Fraction(1, 10)


def test_y_sparse_paving_examples():
    assert y_sparse_paving(SparsePavingProfile(2, 4, 1)) == P([2, 3, 2])
    for k, n in [(2, 5), (3, 7), (4, 8)]:
        assert y_sparse_paving(SparsePavingProfile(k, n, 0)) == y_uniform(k, n)
    assert y_sparse_paving(SparsePavingProfile(3, 6, 2)) == y_uniform(3, 6) - (ONE_PLUS_T ** 3).scale(2)
    two = sparse_paving_family(3, 6, 2, mode="greedy")[0]
    assert y_poly(two) == y_sparse_paving(SparsePavingProfile(3, 6, 2))


def test_sparse_paving_coefficient_examples():
    p = SparsePavingProfile(2, 4, 1)
    assert sparse_paving_coefficient(p, 0) == 2
    assert sparse_paving_coefficient(p, 1) == 3
    assert sparse_paving_coefficient(p, 2) == 2
    for k in range(1, 8):
        for n in range(k + 1, 12):
            zero = SparsePavingProfile(k, n, 0)
            assert sparse_paving_coefficient(zero, 0) == binomial(n - 1, n - k) == y_uniform(k, n)[0]


def test_coefficients_agree_with_polynomial_form():
    for k in range(2, 9):
        for n in range(k + 1, 13):
            for lam in range(sparse_paving_lambda_bound(k, n) + 1):
                p = SparsePavingProfile(k, n, lam)
                assert y_sparse_paving_by_coefficients(p) == y_sparse_paving(p)


def test_central_coefficient_alternative_form():
    # uniform part minus lambda*C(k,k/2), then add back lambda*Catalan
    for k in (2, 4, 6):
        for n in range(k + 1, 12):
            for lam in range(sparse_paving_lambda_bound(k, n) + 1):
                p = SparsePavingProfile(k, n, lam)
                h = k // 2
                direct = binomial(n, h) * binomial(n - h - 1, n - k) - lam * (binomial(k, h) - catalan(h))
                assert sparse_paving_coefficient(p, h) == direct


def test_sparse_paving_matches_engine():
    for k in range(2, 5):
        for n in range(k + 1, 9):
            for lam in range(sparse_paving_lambda_bound(k, n) + 1):
                for m in sparse_paving_family(k, n, lam, mode="all", budget=3):
                    assert y_poly(m) == y_sparse_paving(SparsePavingProfile(k, n, lam))


def test_rank_one_sparse_paving_uses_paving_formula():
    for n in range(2, 7):
        m = from_bases(n, [[e] for e in range(1, n)])  # element 0 is a loop
        assert len(circuit_hyperplanes(m)) == 1
        assert y_poly(m) == y_paving(1, n, {1: 1}) == ONE_PLUS_T
        assert y_sparse_paving(SparsePavingProfile(1, n, 1)) != y_poly(m)


def test_y_paving():
    assert y_paving(2, 4, {2: 1}) == P([2, 3, 2])
    assert y_paving(3, 6, {}) == y_uniform(3, 6)
    want = (
        y_uniform(3, 7)
        - (y_uniform(3, 4) - ONE_PLUS_T * y_uniform(2, 3))
        - (y_uniform(3, 5) - ONE_PLUS_T * y_uniform(2, 4))
    )
    assert y_paving(3, 7, {3: 1, 4: 1}) == want
    with pytest.raises(InvalidHyperplaneSize):
        y_paving(3, 7, {2: 1})


def test_y_paving_against_engine_with_large_hyperplane():
    # rank 3 on 7 points: one 4-point line plus one 3-point line meeting it in at most one point
    from itertools import combinations

    lines = [0b0001111, 0b1110000]
    bases = [
        sum(1 << e for e in c)
        for c in combinations(range(7), 3)
        if not any(sum(1 << e for e in c) & ~line == 0 for line in lines)
    ]
    m = from_bases(7, bases)
    hyper = [s for s in stressed_subsets(m) if s.subset_rank == 2 and s.cusp_nonempty]
    sizes = sorted(s.subset_size for s in hyper)
    assert sizes == [3, 4]
    assert y_poly(m) == y_paving(3, 7, {3: 1, 4: 1})


def cuspidal_y(r, k, h, n):
    return y_poly(cuspidal_matroid(r, k, h, n))


def test_y_elementary_split():
    assert y_elementary_split(3, 6, {}, cuspidal_y) == y_uniform(3, 6)
    for k, n, lam in [(2, 4, 1), (3, 6, 2), (3, 7, 3)]:
        assert y_elementary_split(k, n, {(k - 1, k): lam}, cuspidal_y) == y_sparse_paving(SparsePavingProfile(k, n, lam))
    assert y_elementary_split(2, 4, {(1, 2): 1}, cuspidal_y) == y_poly(cuspidal_matroid(1, 2, 2, 4))
    with pytest.raises(InvalidCuspidalParameters):
        y_elementary_split(2, 4, {(3, 2): 1}, cuspidal_y)


def test_cuspidal_corank_one_simplifies_to_uniform():
    for n in range(3, 9):
        for k in range(1, n):
            for h in range(k, n):
                lam = cuspidal_matroid(k - 1, k, h, n)
                assert y_poly(lam) == y_uniform(k, h + 1)


def test_sparse_correction_identity():
    lhs, rhs = sparse_correction_identity(2)
    assert lhs == rhs == P([1, 1, 1])
    assert sparse_correction_identity(4)[1] == ONE_PLUS_T ** 4 - P([0, 0, 2])
    for k in range(2, 13):
        lhs, rhs = sparse_correction_identity(k)
        assert lhs == rhs
    lhs, rhs = sparse_correction_identity(1)
    assert lhs.is_zero() and rhs == ONE_PLUS_T
    assert sparse_correction(3) == ONE_PLUS_T ** 3
