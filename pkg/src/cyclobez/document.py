"""JSON certificate documents.

Coefficients travel as decimal strings so no consumer ever rounds them
through a float::

    {"format_version": 1, "m": 6, "n": 3, "k": 2, "a": ["1", "1"], "b": ["1", "-1"]}
"""

from __future__ import annotations

import json
import re

from .bezout import Certificate
from .errors import InputError
from .intpoly import IntPoly

FORMAT_VERSION = 1
_INT_RE = re.compile(r"-?(0|[1-9][0-9]*)\Z")
_KEYS = {"format_version", "m", "n", "k", "a", "b"}


class DocumentError(InputError):
    """Malformed certificate document."""


def coeff_strings(f: IntPoly) -> list[str]:
    return [str(c) for c in f.coeffs]


def to_dict(c: Certificate) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "m": c.m,
        "n": c.n,
        "k": c.k,
        "a": coeff_strings(c.a),
        "b": coeff_strings(c.b),
    }


def render(c: Certificate) -> str:
    return json.dumps(to_dict(c)) + "\n"


def _int_field(doc, key):
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise DocumentError(f"field {key!r} must be an integer")
    return v


def _poly_field(doc, key):
    v = doc[key]
    if not isinstance(v, list) or not all(isinstance(s, str) and _INT_RE.match(s) for s in v):
        raise DocumentError(f"field {key!r} must be a list of decimal strings")
    return IntPoly(int(s) for s in v)


def from_dict(doc) -> Certificate:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    missing = _KEYS - doc.keys()
    if missing:
        raise DocumentError(f"missing fields: {', '.join(sorted(missing))}")
    if doc["format_version"] != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {doc['format_version']!r}")
    return Certificate(
        m=_int_field(doc, "m"),
        n=_int_field(doc, "n"),
        k=_int_field(doc, "k"),
        a=_poly_field(doc, "a"),
        b=_poly_field(doc, "b"),
    )


def parse(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    return from_dict(doc)
