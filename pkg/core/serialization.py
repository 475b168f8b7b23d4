"""Exact JSON encoding for certificates and reports.

Only exact values are representable: integers, ``Fraction`` (as ``"p/q"``),
objects exposing ``to_json()`` and the usual containers. Floats are refused.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Union

INFINITY_LITERAL = "inf"


def format_rational(value: Union[int, Fraction]) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: Union[str, int]) -> Fraction:
    if isinstance(text, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"rational literal must be a string, got {type(text).__name__}")
    stripped = text.strip()
    if not stripped or any(ch in stripped for ch in ".eE"):
        raise ValueError(f"not an exact rational literal: {text!r}")
    return Fraction(stripped)


def to_jsonable(value: Any) -> Any:
    """Recursively convert ``value`` into plain JSON types."""

    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not allowed in exact output")
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, str):
        return value
    to_json = getattr(value, "to_json", None)
    if callable(to_json):
        return to_jsonable(to_json())
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if is_dataclass(value) and not isinstance(value, type):
        return to_jsonable(asdict(value))
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(value: Any, indent: int | None = 2) -> str:
    return json.dumps(to_jsonable(value), sort_keys=True, indent=indent, ensure_ascii=False)


def canonical_hash(value: Any) -> str:
    """SHA-256 over the compact sorted-key dump."""

    payload = json.dumps(to_jsonable(value), sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


__all__ = [
    "INFINITY_LITERAL",
    "canonical_hash",
    "dumps",
    "format_rational",
    "parse_rational",
    "to_jsonable",
]
