"""Per-matroid property reports and batch scans for unimodality/log-concavity of Y."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .closed_forms import (
    SparsePavingProfile,
    mu_uniform,
    q_uniform,
    sparse_paving_coefficient,
    y_paving,
    y_sparse_paving,
    y_uniform,
    z_uniform,
)
from .config import SCHEMA_VERSION
from .engine import KLEngine, default_engine
from .errors import ClosedFormMismatch
from .matroid import (
    Matroid,
    boolean_matroid,
    circuit_hyperplanes,
    elements,
    is_paving,
    is_sparse_paving,
    is_uniform,
    remove_loops,
    sparse_paving_family,
    sparse_paving_lambda_bound,
)
from .polynomial import (
    GammaVector,
    IntPolynomial,
    gamma_expansion,
    is_log_concave_no_internal_zeros,
    is_nonnegative,
    is_palindromic,
    is_unimodal,
)

VERDICTS = (
    "y_nonnegative",
    "y_palindromic",
    "y_unimodal",
    "y_logconcave_no_internal_zeros",
    "y_gamma_positive",
)


def bases_one_based(m: Matroid) -> list[list[int]]:
    return [[e + 1 for e in elements(b)] for b in m.bases]


def y_verdicts(y: IntPolynomial, rank: int) -> dict[str, bool]:
    palindromic = is_palindromic(y, rank)
    return {
        "y_nonnegative": is_nonnegative(y),
        "y_palindromic": palindromic,
        "y_unimodal": is_unimodal(y),
        "y_logconcave_no_internal_zeros": is_log_concave_no_internal_zeros(y),
        "y_gamma_positive": palindromic and gamma_expansion(y, rank).is_gamma_positive,
    }


def sparse_paving_y(profile: SparsePavingProfile) -> IntPolynomial:
    """Closed-form Y for a sparse paving profile.

    In rank 1 the correction term of the general formula does not vanish as it
    should, so the paving formula (whose correction is zero there) is used.
    """
    if profile.k == 1:
        return y_paving(1, profile.n, {1: profile.lam})
    return y_sparse_paving(profile)


@dataclass
class PropertyReport:
    matroid_key: tuple
    label: str | None
    n: int
    rank: int
    bases: list[list[int]]
    is_paving: bool
    is_sparse_paving: bool
    lam: int | None
    polynomials: dict[str, IntPolynomial]
    verdicts: dict[str, bool]
    closed_form_agreement: bool | None
    timing_ms: float = 0.0
    schema_version: int = SCHEMA_VERSION

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "schema_version": self.schema_version,
            "label": self.label,
            "n": self.n,
            "rank": self.rank,
            "bases": self.bases,
            "is_paving": self.is_paving,
            "is_sparse_paving": self.is_sparse_paving,
            "lambda": self.lam,
            "polynomials": {k: p.to_strings() for k, p in self.polynomials.items()},
            "verdicts": dict(self.verdicts),
            "closed_form_agreement": self.closed_form_agreement,
        }
        if include_timing:
            out["timing_ms"] = round(self.timing_ms, 3)
        return out


def _closed_form_agreement(m: Matroid, polys: dict[str, IntPolynomial], mu: int, sparse: bool, lam: int | None) -> bool | None:
    k, n = m.rank, m.n
    if k >= 1 and is_uniform(m):
        expected = {"Y": y_uniform(k, n), "Z": z_uniform(k, n), "Q": q_uniform(k, n)}
        bad = [name for name, p in expected.items() if polys[name] != p]
        if mu != mu_uniform(k, n):
            bad.append("mu")
        if bad:
            raise ClosedFormMismatch(f"{m!r}: engine and uniform closed forms differ on {bad}")
        return True
    if sparse and 1 <= k < n:
        profile = SparsePavingProfile(k, n, lam)
        y = polys["Y"]
        if y != sparse_paving_y(profile):
            raise ClosedFormMismatch(f"{m!r}: engine Y {y} differs from the sparse paving formula")
        if k >= 2:
            coeffs = [sparse_paving_coefficient(profile, i) for i in range(k + 1)]
            if IntPolynomial(coeffs) != y:
                raise ClosedFormMismatch(f"{m!r}: coefficient formula {coeffs} differs from engine Y {y}")
        return True
    return None


def analyze(m: Matroid, engine: KLEngine | None = None) -> PropertyReport:
    """Invariants, Y verdicts and closed-form agreement for one matroid.

    chi, P, Q and Z are those of the loopless part; Y ignores loops by definition.
    """
    eng = engine or default_engine
    start = time.perf_counter()
    core = remove_loops(m)
    inv = eng.invariants(core)
    polys = {"chi": inv.chi, "P": inv.P, "Q": inv.Q, "Z": inv.Z, "Y": inv.Y}
    paving = is_paving(m)
    sparse = paving and is_sparse_paving(m)
    lam = len(circuit_hyperplanes(m)) if sparse else None
    verdicts = y_verdicts(inv.Y, core.rank)
    agreement = _closed_form_agreement(m, polys, inv.mu, sparse, lam)
    elapsed = (time.perf_counter() - start) * 1000.0
    return PropertyReport(
        matroid_key=m.key,
        label=m.label,
        n=m.n,
        rank=m.rank,
        bases=bases_one_based(m),
        is_paving=paving,
        is_sparse_paving=sparse,
        lam=lam,
        polynomials=polys,
        verdicts=verdicts,
        closed_form_agreement=agreement,
        timing_ms=elapsed,
    )


# ---------------------------------------------------------------------------
# scans

@dataclass
class ScanSummary:
    total: int = 0
    counterexamples_unimodal: list[dict] = field(default_factory=list)
    counterexamples_logconcave: list[dict] = field(default_factory=list)
    counterexamples_nonnegative: list[dict] = field(default_factory=list)
    counterexamples_palindromic: list[dict] = field(default_factory=list)
    gamma_negative_examples: list[dict] = field(default_factory=list)
    unrealizable: list[dict] = field(default_factory=list)
    profiles_checked: int = 0
    parameters: dict = field(default_factory=dict)
    reports: list[PropertyReport] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    @property
    def has_counterexamples(self) -> bool:
        return bool(
            self.counterexamples_unimodal
            or self.counterexamples_logconcave
            or self.counterexamples_nonnegative
            or self.counterexamples_palindromic
        )

    def record(self, report: PropertyReport) -> None:
        self.total += 1
        self.reports.append(report)
        self._check(_entry(report), report.verdicts)

    def _check(self, entry: dict, verdicts: dict[str, bool]) -> None:
        if not verdicts["y_unimodal"]:
            self.counterexamples_unimodal.append(entry)
        if not verdicts["y_logconcave_no_internal_zeros"]:
            self.counterexamples_logconcave.append(entry)
        if not verdicts["y_nonnegative"]:
            self.counterexamples_nonnegative.append(entry)
        if not verdicts["y_palindromic"]:
            self.counterexamples_palindromic.append(entry)
        if not verdicts["y_gamma_positive"]:
            self.gamma_negative_examples.append({k: entry[k] for k in ("label", "n", "rank", "Y")})

    def finalize(self) -> ScanSummary:
        order = lambda e: (e["n"], e["rank"], e.get("bases") or [], e["label"] or "")
        for lst in (
            self.counterexamples_unimodal,
            self.counterexamples_logconcave,
            self.counterexamples_nonnegative,
            self.counterexamples_palindromic,
            self.gamma_negative_examples,
        ):
            lst.sort(key=order)
        self.reports.sort(key=lambda r: r.matroid_key)
        return self

    def to_dict(self, include_reports: bool = False, include_timing: bool = False) -> dict:
        out = {
            "schema_version": self.schema_version,
            "parameters": self.parameters,
            "total": self.total,
            "profiles_checked": self.profiles_checked,
            "counterexamples_unimodal": self.counterexamples_unimodal,
            "counterexamples_logconcave": self.counterexamples_logconcave,
            "counterexamples_nonnegative": self.counterexamples_nonnegative,
            "counterexamples_palindromic": self.counterexamples_palindromic,
            "gamma_negative_count": len(self.gamma_negative_examples),
            "gamma_negative_examples": self.gamma_negative_examples,
            "unrealizable": self.unrealizable,
        }
        if include_reports:
            out["reports"] = [r.to_dict(include_timing) for r in self.reports]
        return out


def _entry(report: PropertyReport) -> dict:
    return {
        "label": report.label,
        "n": report.n,
        "rank": report.rank,
        "bases": report.bases,
        "Y": report.polynomials["Y"].to_strings(),
    }


def _range(r: Iterable[int] | tuple[int, int]) -> list[int]:
    if isinstance(r, tuple) and len(r) == 2 and all(isinstance(x, int) for x in r):
        return list(range(r[0], r[1] + 1))
    return list(r)


def scan_sparse_paving(
    k_range: Iterable[int] | tuple[int, int],
    n_range: Iterable[int] | tuple[int, int],
    lambda_policy: str = "all-feasible",
    per_lambda: int = 1,
    engine: KLEngine | None = None,
) -> ScanSummary:
    """Check Y of sparse paving matroids for every (k, n, lambda) in range.

    Ranges are inclusive (lo, hi) pairs or explicit iterables.  For each
    feasible lambda the profile formula is checked, and up to ``per_lambda``
    concrete matroids are generated and analyzed.  Lambdas with no matroid
    are listed under ``unrealizable``.
    """
    if lambda_policy not in ("all-feasible", "max-only"):
        raise ValueError(f"unknown lambda policy {lambda_policy!r}")
    ks, ns = _range(k_range), _range(n_range)
    summary = ScanSummary(
        parameters={"kind": "sparse-paving", "k": ks, "n": ns, "lambda_policy": lambda_policy, "per_lambda": per_lambda}
    )
    for k in ks:
        for n in ns:
            if k < 1 or n < k:
                continue
            if n == k:
                summary.record(analyze(boolean_matroid(k), engine))
                continue
            top = sparse_paving_lambda_bound(k, n)
            lams = range(top + 1) if lambda_policy == "all-feasible" else [top]
            for lam in lams:
                profile = SparsePavingProfile(k, n, lam)
                y = sparse_paving_y(profile)
                summary.profiles_checked += 1
                summary._check(
                    {"label": f"profile{k},{n},{lam}", "n": n, "rank": k, "bases": None, "Y": y.to_strings()},
                    y_verdicts(y, k),
                )
                mode = "greedy" if per_lambda == 1 else "all"
                found = sparse_paving_family(k, n, lam, mode=mode, budget=per_lambda)
                if not found:
                    summary.unrealizable.append({"k": k, "n": n, "lambda": lam})
                for m in found:
                    report = analyze(m, engine)
                    if report.lam != lam:
                        raise ClosedFormMismatch(f"{m!r} has {report.lam} circuit-hyperplanes, expected {lam}")
                    summary.record(report)
    return summary.finalize()


def _analyze_worker(m: Matroid) -> PropertyReport:
    return analyze(m)


def scan_catalog(entries: Sequence[Matroid], jobs: int = 1, engine: KLEngine | None = None) -> ScanSummary:
    """Analyze arbitrary matroids; counterexamples keep full basis lists."""
    summary = ScanSummary(parameters={"kind": "catalog", "entries": len(entries)})
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_analyze_worker, entries))
    else:
        reports = [analyze(m, engine) for m in entries]
    for r in sorted(reports, key=lambda r: r.matroid_key):
        summary.record(r)
    return summary.finalize()


def gamma_survey(entries: Iterable[Matroid], engine: KLEngine | None = None) -> list[tuple[tuple, GammaVector, bool]]:
    eng = engine or default_engine
    out = []
    for m in entries:
        core = remove_loops(m)
        g = gamma_expansion(eng.invariants(core).Y, core.rank)
        out.append((m.key, g, g.is_gamma_positive))
    return out


__all__ = [
    "PropertyReport",
    "ScanSummary",
    "VERDICTS",
    "analyze",
    "bases_one_based",
    "gamma_survey",
    "scan_catalog",
    "scan_sparse_paving",
    "sparse_paving_y",
    "y_verdicts",
]
