"""Process-wide knobs read from the environment."""
from __future__ import annotations

import os
from dataclasses import asdict, dataclass

DEFAULT_GROUND_SET_LIMIT = 20
GROUND_SET_LIMIT_ENV = "MATROIDKL_GROUND_SET_LIMIT"
DISABLE_NUMBA_ENV = "MATROIDKL_DISABLE_NUMBA"
DEFAULT_FLAT_LIMIT = 20_000
FLAT_LIMIT_ENV = "MATROIDKL_FLAT_LIMIT"

_limit_override: int | None = None


def ground_set_limit() -> int:
    if _limit_override is not None:
        return _limit_override
    raw = os.environ.get(GROUND_SET_LIMIT_ENV)
    if raw:
        value = int(raw)
        if value <= 0:
            raise ValueError(f"{GROUND_SET_LIMIT_ENV} must be positive, got {value}")
        return value
    return DEFAULT_GROUND_SET_LIMIT


def set_ground_set_limit(value: int | None) -> None:
    """Override the limit for this process (``None`` restores env/default)."""
    global _limit_override
    if value is not None and value <= 0:
        raise ValueError("ground set limit must be positive")
    _limit_override = value


def flat_limit() -> int:
    """Largest lattice of flats the recursive engine will take on."""
    raw = os.environ.get(FLAT_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_FLAT_LIMIT


def numba_disabled() -> bool:
    return os.environ.get(DISABLE_NUMBA_ENV, "").strip().lower() not in ("", "0", "false", "no")


SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RunConfig:
    """Everything besides the inputs that influences a report; echoed into JSON output."""

    ground_set_limit: int = DEFAULT_GROUND_SET_LIMIT
    k_range: tuple[int, int] | None = None
    n_range: tuple[int, int] | None = None
    lambda_policy: str = "all-feasible"
    per_lambda: int = 1
    output: str | None = None
    jobs: int = 1
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        if self.ground_set_limit <= 0 or self.jobs <= 0 or self.per_lambda <= 0:
            raise ValueError("ground_set_limit, jobs and per_lambda must be positive")
        if self.lambda_policy not in ("all-feasible", "max-only"):
            raise ValueError(f"unknown lambda policy {self.lambda_policy!r}")

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("k_range", "n_range"):
            if out[key] is not None:
                out[key] = list(out[key])
        return out
