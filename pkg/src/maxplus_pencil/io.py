"""Exact JSON encoding of scalars, matrices, interval systems and schedules.

Scalars on the wire are JSON integers, ``"p/q"`` strings in lowest terms, or
the string ``"-inf"``. Floats are refused on input and never produced.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from pathlib import Path

from .core import BOTTOM, Matrix, ext
from .scheduling import ScheduleInstance
from .spectrum import IntervalSystem

_RATIONAL = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


class ParseError(ValueError):
    """Malformed or non-exact input document."""


def format_scalar(v) -> str:
    if v is BOTTOM or v == -math.inf:
        return "-inf"
    if v == math.inf:
        return "inf"
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def scalar_to_json(v):
    if v is BOTTOM or (isinstance(v, float) and math.isinf(v)):
        return format_scalar(v)
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else format_scalar(v)


def parse_scalar(raw):
    if isinstance(raw, bool) or isinstance(raw, float):
        raise ParseError(f"{raw!r} is not an exact scalar; use an integer, 'p/q' or '-inf'")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        s = raw.strip()
        if s == "-inf":
            return BOTTOM
        if not _RATIONAL.match(s):
            raise ParseError(f"cannot parse {raw!r} as a rational")
        try:
            return ext(s.replace(" ", ""))
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {raw!r}") from None
    raise ParseError(f"unsupported scalar {raw!r}")


def parse_finite(raw) -> Fraction:
    v = parse_scalar(raw)
    if v is BOTTOM:
        raise ParseError("expected a finite rational, got -inf")
    return v


def matrix_to_json(M: Matrix) -> dict:
    return {
        "rows": M.nrows,
        "cols": M.ncols,
        "entries": [[scalar_to_json(e) for e in r] for r in M.rows],
    }


def _grid(raw) -> list:
    if not isinstance(raw, list) or not raw or not all(isinstance(r, list) for r in raw):
        raise ParseError("entries must be a non-empty list of rows")
    return [[parse_scalar(e) for e in r] for r in raw]


def matrix_from_json(doc) -> Matrix:
    if isinstance(doc, list):
        grid = _grid(doc)
    else:
        if not isinstance(doc, dict) or "entries" not in doc:
            raise ParseError("matrix document needs an 'entries' field")
        grid = _grid(doc["entries"])
        rows, cols = doc.get("rows", len(grid)), doc.get("cols", len(grid[0]))
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ParseError(f"entries do not form a {rows} x {cols} grid")
    if any(len(r) != len(grid[0]) for r in grid):
        raise ParseError("entries are not rectangular")
    return Matrix(grid)


def intervals_to_json(sys: IntervalSystem) -> dict:
    return {"intervals": [[scalar_to_json(a), scalar_to_json(c)] for a, c in sys]}


def intervals_from_json(doc) -> IntervalSystem:
    """Parse an interval document; invariant violations raise IntervalSystemError."""
    if not isinstance(doc, dict) or not isinstance(doc.get("intervals"), list):
        raise ParseError("interval document needs an 'intervals' list")
    pairs = []
    for item in doc["intervals"]:
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"interval {item!r} is not a pair")
        pairs.append((parse_finite(item[0]), parse_finite(item[1])))
    return IntervalSystem(tuple(pairs))


def instance_to_json(inst: ScheduleInstance) -> dict:
    return {
        "durations_a": matrix_to_json(inst.durations_a),
        "durations_b": matrix_to_json(inst.durations_b),
    }


def instance_from_json(doc) -> ScheduleInstance:
    if not isinstance(doc, dict) or "durations_a" not in doc or "durations_b" not in doc:
        raise ParseError("instance document needs 'durations_a' and 'durations_b'")
    return ScheduleInstance(matrix_from_json(doc["durations_a"]), matrix_from_json(doc["durations_b"]))


def load_json(path) -> object:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from None


def dump_json(doc, path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
