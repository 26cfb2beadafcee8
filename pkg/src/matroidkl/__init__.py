"""Exact Kazhdan-Lusztig-Stanley invariants of matroids (P, Q, Z and the inverse Z-polynomial Y)."""
from __future__ import annotations

__version__ = "0.1.0"

from .closed_forms import (
    SparsePavingProfile,
    mu_uniform,
    q_uniform,
    sparse_correction_identity,
    sparse_paving_coefficient,
    y_elementary_split,
    y_paving,
    y_sparse_paving,
    y_uniform,
    y_uniform_corank1,
    z_uniform,
)
from .engine import (
    InvariantCache,
    Invariants,
    KLEngine,
    characteristic,
    interval_contraction,
    inverse_kl_q,
    kl_p,
    mobius_invariant,
    tutte,
    y_hat,
    y_poly,
    z_poly,
)
from .matroid import (
    FlatLattice,
    Matroid,
    boolean_matroid,
    circuit_hyperplanes,
    contraction,
    cuspidal_matroid,
    deletion,
    direct_sum,
    dual,
    flats,
    from_bases,
    is_paving,
    is_sparse_paving,
    relax,
    remove_loops,
    restriction,
    simplify,
    sparse_paving_family,
    stressed_subsets,
    uniform,
)
from .polynomial import BiPolynomial, GammaVector, IntPolynomial, gamma_expansion
from .analysis import PropertyReport, ScanSummary, analyze, gamma_survey, scan_catalog, scan_sparse_paving

__all__ = [name for name in dir() if not name.startswith("_")]
