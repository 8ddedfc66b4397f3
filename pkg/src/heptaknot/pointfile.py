"""Point files and JSONL result records.

A point file is ``{"points": [[x, y, z], ...]}``; a coordinate is a JSON
integer, a decimal string ("-0.125") or a rational string ("7/3").  JSON
numbers with a fraction part are read from their literal text, never through
a binary float.
"""
from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .geometry import as_rational


class PointFileError(ValueError):
    pass


def _coord(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise PointFileError(f"coordinate {value!r} is not an integer or a numeric string")
    try:
        return as_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise PointFileError(f"bad coordinate {value!r}: {exc}") from None


def parse_points(doc: Any) -> list[tuple[Fraction, Fraction, Fraction]]:
    if not isinstance(doc, dict) or "points" not in doc:
        raise PointFileError('expected an object with a "points" array')
    raw = doc["points"]
    if not isinstance(raw, list):
        raise PointFileError('"points" must be an array')
    pts = []
    for i, p in enumerate(raw):
        if not isinstance(p, list) or len(p) != 3:
            raise PointFileError(f"point {i} is not a 3-element array")
        pts.append(tuple(_coord(c) for c in p))
    return pts


def loads_points(text: str) -> list[tuple[Fraction, Fraction, Fraction]]:
    try:
        # keep non-integer literals as text so they convert exactly
        doc = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise PointFileError(f"invalid JSON: {exc}") from None
    return parse_points(doc)


def read_points(path) -> list[tuple[Fraction, Fraction, Fraction]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise PointFileError(f"cannot read {path}: {exc}") from None
    return loads_points(text)


def coord_json(c) -> int | str:
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def points_doc(points: Sequence) -> dict:
    return {"points": [[coord_json(c) for c in p] for p in points]}


def dumps_points(points: Sequence) -> str:
    return json.dumps(points_doc(points)) + "\n"


def write_points(path, points: Sequence) -> None:
    Path(path).write_text(dumps_points(points))


def append_record(path, record: dict) -> None:
    """Append one JSON object as a line; a single write keeps lines whole."""
    line = json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n"
    with open(path, "a") as fh:
        fh.write(line)
        fh.flush()
        os.fsync(fh.fileno())


def read_records(path) -> list[dict]:
    with open(path) as fh:
        return [json.loads(ln) for ln in fh if ln.strip()]
