"""Reading and writing matroid catalogs.

Two on-disk formats, both with 1-based element labels:

JSON::

    [{"name": "U24-relaxed", "n": 4, "bases": [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]}]

line format (``#`` starts a comment)::

    U24-relaxed 2 4 : 1,3 ; 1,4 ; 2,3 ; 2,4 ; 3,4
"""
from __future__ import annotations

import json
import logging
import re
from pathlib import Path

from .errors import MatroidInputError, ParseError, ValidationError
from .matroid import Matroid, elements, from_bases

log = logging.getLogger("matroidkl")

_HEADER = re.compile(r"\s*(\S+)\s+(-?\d+)\s+(-?\d+)\s*$")


def entry_dict(m: Matroid, name: str | None = None) -> dict:
    return {"name": name if name is not None else m.label, "n": m.n, "bases": [[e + 1 for e in elements(b)] for b in m.bases]}


def _build(name: str, n, bases, rank: int | None = None) -> Matroid:
    try:
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise MatroidInputError(f"n must be a non-negative integer, got {n!r}")
        if not isinstance(bases, list) or not all(isinstance(b, list) for b in bases):
            raise MatroidInputError("bases must be a list of lists")
        zero_based = []
        for b in bases:
            for e in b:
                if not isinstance(e, int) or isinstance(e, bool) or not 1 <= e <= n:
                    raise MatroidInputError(f"element {e!r} outside 1..{n}")
            if len(set(b)) != len(b):
                raise MatroidInputError(f"basis {b} repeats an element")
            zero_based.append([e - 1 for e in b])
        m = from_bases(n, zero_based, label=name)
        if rank is not None and m.rank != rank:
            raise MatroidInputError(f"declared rank {rank} but bases have size {m.rank}")
        return m
    except MatroidInputError as exc:
        raise ValidationError(name, exc) from exc


def _parse_json(text: str) -> list[Matroid]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(data, list):
        raise ParseError("top level must be a JSON array", 1, 1)
    out = []
    for idx, item in enumerate(data, 1):
        if not isinstance(item, dict):
            raise ValidationError(f"#{idx}", MatroidInputError("entry must be an object"))
        name = item.get("name") or f"entry{idx}"
        missing = [k for k in ("n", "bases") if k not in item]
        if missing:
            raise ValidationError(name, MatroidInputError(f"missing field(s) {missing}"))
        out.append(_build(str(name), item["n"], item["bases"]))
    return out


def _parse_lines(text: str) -> list[Matroid]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ":" not in line:
            raise ParseError("expected 'name k n : b1,b2 ; ...'", lineno, len(line.rstrip()) + 1)
        head, body = line.split(":", 1)
        hm = _HEADER.match(head)
        if not hm:
            raise ParseError("header must be 'name k n'", lineno, 1)
        name, k, n = hm.group(1), int(hm.group(2)), int(hm.group(3))
        bases = []
        offset = len(head) + 2
        for chunk in body.split(";"):
            stripped = chunk.strip()
            col = offset + (len(chunk) - len(chunk.lstrip())) if stripped else offset
            offset += len(chunk) + 1
            if not stripped:
                if k == 0:
                    bases.append([])
                    continue
                raise ParseError("empty basis", lineno, col)
            try:
                bases.append([int(tok) for tok in stripped.split(",")])
            except ValueError:
                raise ParseError(f"bad basis {stripped!r}", lineno, col) from None
        out.append(_build(name, n, bases, rank=k))
    return out


def parse_catalog_text(text: str) -> list[Matroid]:
    stripped = text.lstrip()
    entries = _parse_json(text) if stripped.startswith("[") else _parse_lines(text)
    seen: dict[tuple, str] = {}
    out = []
    for m in entries:
        if m.key in seen:
            log.warning("duplicate entry %r (same matroid as %r) dropped", m.label, seen[m.key])
            continue
        seen[m.key] = m.label
        out.append(m)
    return out


def parse_catalog(path: str | Path) -> list[Matroid]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_catalog_text(text)


def write_catalog(path: str | Path, matroids: list[Matroid]) -> None:
    Path(path).write_text(json.dumps([entry_dict(m) for m in matroids], indent=1) + "\n")
