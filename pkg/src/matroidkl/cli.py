"""Command-line interface.

Subcommands::

    matroidkl poly  SELECTOR WHICH        one polynomial (chi|tutte|P|Q|Z|Y|gamma)
    matroidkl check SELECTOR              full property report
    matroidkl scan  (--sparse-paving | --uniform | --catalog FILE) [ranges]
    matroidkl relax SELECTOR --subset 1,2 relax a stressed subset

Selectors: ``uniform:k,n``, ``boolean:n``, ``file:path#name`` and the
profile-only ``sparse:k,n,lambda`` (Y and gamma only).

Exit codes: 0 ok, 1 scan found a counterexample, 2 bad input,
3 resource limit, 4 internal cross-check failure.  JSON goes to stdout
(or ``--output``); diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import traceback
from dataclasses import dataclass

from . import __version__
from .analysis import analyze, scan_catalog, scan_sparse_paving, sparse_paving_y, y_verdicts
from .catalog import entry_dict, parse_catalog
from .closed_forms import SparsePavingProfile, sparse_paving_coefficient, y_uniform
from .config import SCHEMA_VERSION, RunConfig, ground_set_limit, set_ground_set_limit
from .engine import characteristic, default_engine, tutte
from .errors import CrossCheckError, MatroidInputError, ParseError, ResourceLimitError, RouteMismatch
from .matroid import Matroid, boolean_matroid, relax, remove_loops, to_mask, uniform
from .polynomial import IntPolynomial, gamma_expansion

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_RESOURCE, EXIT_INTERNAL = 0, 1, 2, 3, 4
WHICH = ("chi", "tutte", "P", "Q", "Z", "Y", "gamma")

log = logging.getLogger("matroidkl")


@dataclass(frozen=True)
class Selection:
    text: str
    matroid: Matroid | None = None
    profile: SparsePavingProfile | None = None


def _ints(body: str, count: int, selector: str) -> list[int]:
    parts = body.split(",")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"selector {selector!r}: expected {count} integer(s)") from None
    if len(values) != count:
        raise ParseError(f"selector {selector!r}: expected {count} integer(s), got {len(values)}")
    return values


def parse_selector(text: str) -> Selection:
    kind, sep, body = text.partition(":")
    if not sep:
        raise ParseError(f"selector {text!r} must look like kind:args")
    if kind == "uniform":
        k, n = _ints(body, 2, text)
        return Selection(text, matroid=uniform(k, n))
    if kind == "boolean":
        (n,) = _ints(body, 1, text)
        return Selection(text, matroid=boolean_matroid(n))
    if kind == "sparse":
        k, n, lam = _ints(body, 3, text)
        return Selection(text, profile=SparsePavingProfile(k, n, lam))
    if kind == "file":
        path, _, name = body.rpartition("#") if "#" in body else (body, "", "")
        entries = parse_catalog(path)
        if name:
            hits = [m for m in entries if m.label == name]
            if not hits:
                raise ParseError(f"no entry named {name!r} in {path}")
            return Selection(text, matroid=hits[0])
        if len(entries) != 1:
            raise ParseError(f"{path} has {len(entries)} entries; pick one with #name")
        return Selection(text, matroid=entries[0])
    raise ParseError(f"unknown selector kind {kind!r}")


def parse_range(text: str | None, default_lo: int) -> tuple[int, int] | None:
    """'a..b', '..b', or a single integer, inclusive."""
    if text is None:
        return None
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            v = int(text)
            return v, v
        if not hi:
            raise ParseError(f"range {text!r} needs an upper end")
        return (int(lo) if lo else default_lo), int(hi)
    except ValueError:
        raise ParseError(f"bad range {text!r}") from None


# ---------------------------------------------------------------------------
# commands

def _header(args, config: RunConfig) -> dict:
    return {"schema_version": args.schema_version, "config": config.to_dict()}


def cmd_poly(args, config: RunConfig) -> tuple[dict, int]:
    sel = parse_selector(args.selector)
    which = args.which
    out = _header(args, config) | {"selector": sel.text, "which": which}
    if sel.profile is not None:
        if which not in ("Y", "gamma"):
            raise MatroidInputError(f"profile-only selector {sel.text!r} supports Y and gamma, not {which}")
        p = sel.profile
        y = sparse_paving_y(p)
        routes = ["closed-form"]
        if p.k >= 2:
            coeffs = IntPolynomial(sparse_paving_coefficient(p, i) for i in range(p.k + 1))
            if coeffs != y:
                raise RouteMismatch(f"coefficient formula {coeffs} != closed form {y}")
            routes.append("coefficient-formula")
        return _emit_y(out, y, p.k, which, routes), EXIT_OK

    m = sel.matroid
    if which == "tutte":
        t = tutte(m)
        out["terms"] = [[i, j, str(c)] for i, j, c in t.terms()]
        return out, EXIT_OK
    core = remove_loops(m)
    if core.n != m.n:
        out["loops_removed"] = m.n - core.n
    if which == "chi":
        p = characteristic(core)
        out["routes"] = ["flats", "tutte"]
    elif which in ("P", "Q", "Z"):
        inv = default_engine.invariants(core)
        p = {"P": inv.P, "Q": inv.Q, "Z": inv.Z}[which]
    else:
        y = default_engine.invariants(core).Y
        routes = ["engine"]
        if m.rank >= 1 and sel.text.startswith("uniform:"):
            closed = y_uniform(m.rank, m.n)
            if closed != y:
                raise RouteMismatch(f"engine Y {y} != closed form {closed}")
            routes.append("closed-form")
        return _emit_y(out, y, core.rank, which, routes), EXIT_OK
    out["coefficients"] = p.to_strings()
    out["degree"] = p.degree
    return out, EXIT_OK


def _emit_y(out: dict, y: IntPolynomial, rank: int, which: str, routes: list[str]) -> dict:
    out["routes"] = routes
    if which == "gamma":
        g = gamma_expansion(y, rank)
        out["coefficients"] = [str(c) for c in g.gammas]
        out["center"] = g.center
        out["gamma_positive"] = g.is_gamma_positive
        return out
    out["coefficients"] = y.to_strings()
    out["degree"] = y.degree
    out["verdicts"] = y_verdicts(y, rank)
    return out


def cmd_check(args, config: RunConfig) -> tuple[dict, int]:
    sel = parse_selector(args.selector)
    if sel.matroid is None:
        raise MatroidInputError("check needs a concrete matroid, not a profile-only selector")
    report = analyze(sel.matroid)
    return _header(args, config) | {"selector": sel.text} | report.to_dict(args.timings), EXIT_OK


def cmd_scan(args, config: RunConfig) -> tuple[dict, int]:
    modes = [bool(args.sparse_paving), bool(args.uniform), args.catalog is not None]
    if sum(modes) != 1:
        raise MatroidInputError("choose exactly one of --sparse-paving, --uniform, --catalog")
    if args.catalog is not None:
        summary = scan_catalog(parse_catalog(args.catalog), jobs=config.jobs)
    elif args.uniform:
        lo, hi = config.n_range or (1, 7)
        entries = [uniform(k, n) for n in range(lo, hi + 1) for k in range(1, n + 1)]
        summary = scan_catalog(entries, jobs=config.jobs)
        summary.parameters = {"kind": "uniform", "n": list(range(lo, hi + 1))}
    else:
        if config.k_range is None or config.n_range is None:
            raise MatroidInputError("--sparse-paving needs --k and --n")
        summary = scan_sparse_paving(config.k_range, config.n_range, config.lambda_policy, config.per_lambda)
    body = _header(args, config) | summary.to_dict(include_reports=args.reports, include_timing=args.timings)
    if summary.has_counterexamples:
        print("counterexample(s) found; see counterexamples_* in the output", file=sys.stderr)
        return body, EXIT_COUNTEREXAMPLE
    return body, EXIT_OK


def cmd_relax(args, config: RunConfig) -> tuple[dict, int]:
    sel = parse_selector(args.selector)
    if sel.matroid is None:
        raise MatroidInputError("relax needs a concrete matroid")
    m = sel.matroid
    try:
        subset = [int(x) for x in args.subset.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"bad --subset {args.subset!r}") from None
    if any(not 1 <= e <= m.n for e in subset):
        raise MatroidInputError(f"--subset elements must lie in 1..{m.n}")
    relaxed = relax(m, to_mask(e - 1 for e in subset))
    name = args.name or f"{m.label or 'matroid'}-relaxed"
    return {"schema_version": args.schema_version} | entry_dict(relaxed, name), EXIT_OK


COMMANDS = {"poly": cmd_poly, "check": cmd_check, "scan": cmd_scan, "relax": cmd_relax}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ground-set-limit", type=int, default=None, help="refuse ground sets larger than this")
    common.add_argument("--schema-version", type=int, default=SCHEMA_VERSION, help="report schema version to emit")
    common.add_argument("--output", "-o", default=None, help="write JSON here instead of stdout")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte-identity)")
    common.add_argument("--verbose", "-v", action="store_true")

    parser = argparse.ArgumentParser(prog="matroidkl", description="Kazhdan-Lusztig-Stanley invariants of matroids.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="compute one polynomial")
    p.add_argument("selector")
    p.add_argument("which", choices=WHICH)

    c = sub.add_parser("check", parents=[common], help="property report for one matroid")
    c.add_argument("selector")

    s = sub.add_parser("scan", parents=[common], help="batch verdict scan")
    s.add_argument("--sparse-paving", action="store_true")
    s.add_argument("--uniform", action="store_true")
    s.add_argument("--catalog", default=None)
    s.add_argument("--k", dest="k_range", default=None, help="rank range, e.g. 1..4")
    s.add_argument("--n", dest="n_range", default=None, help="size range, e.g. ..8")
    s.add_argument("--lambda-policy", choices=("all-feasible", "max-only"), default="all-feasible")
    s.add_argument("--per-lambda", type=int, default=1, help="matroids generated per lambda value")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--reports", action="store_true", help="include per-matroid reports")

    r = sub.add_parser("relax", parents=[common], help="relax a stressed subset")
    r.add_argument("selector")
    r.add_argument("--subset", required=True, help="1-based elements, e.g. 1,2")
    r.add_argument("--name", default=None)
    return parser


def _config(args) -> RunConfig:
    if args.schema_version != SCHEMA_VERSION:
        raise MatroidInputError(f"unsupported schema version {args.schema_version}; this build writes {SCHEMA_VERSION}")
    if args.ground_set_limit is not None:
        set_ground_set_limit(args.ground_set_limit)
    return RunConfig(
        ground_set_limit=ground_set_limit(),
        k_range=parse_range(getattr(args, "k_range", None), 1),
        n_range=parse_range(getattr(args, "n_range", None), 1),
        lambda_policy=getattr(args, "lambda_policy", "all-feasible"),
        per_lambda=getattr(args, "per_lambda", 1),
        output=args.output,
        jobs=getattr(args, "jobs", 1),
    )


def _write(body: dict, path: str | None) -> None:
    text = json.dumps(body, indent=2) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        config = _config(args)
        body, code = COMMANDS[args.command](args, config)
    except (MatroidInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except CrossCheckError as exc:
        print(f"internal cross-check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception:  # noqa: BLE001 - anything unexpected is an internal failure
        traceback.print_exc(file=sys.stderr)
        return EXIT_INTERNAL
    finally:
        set_ground_set_limit(None)
    _write(body, args.output)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
