"""Points of the projective line over Q(i)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Tuple, Union

from core.errors import InvalidInput
from core.serialization import INFINITY_LITERAL
from exactnum.gaussian import ONE, ZERO, GaussianRational


@dataclass(frozen=True)
class ProjectivePoint:
    """Homogeneous pair ``(a, b)``, stored canonically.

    Finite points have ``b = 1``; the point at infinity is ``(1, 0)``.
    """

    a: GaussianRational
    b: GaussianRational = ONE

    def __post_init__(self) -> None:
        a = GaussianRational.coerce(self.a)
        b = GaussianRational.coerce(self.b)
        if a.is_zero and b.is_zero:
            raise InvalidInput("(0, 0) is not a point of the projective line")
        if b.is_zero:
            a, b = ONE, ZERO
        else:
            a, b = a / b, ONE
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def finite(cls, value: Union[GaussianRational, Fraction, int]) -> "ProjectivePoint":
        return cls(GaussianRational.coerce(value), ONE)

    @classmethod
    def infinity(cls) -> "ProjectivePoint":
        return cls(ONE, ZERO)

    @classmethod
    def parse(cls, literal: Any) -> "ProjectivePoint":
        if isinstance(literal, ProjectivePoint):
            return literal
        if isinstance(literal, str) and literal.strip().lower() in {INFINITY_LITERAL, "infinity", "oo"}:
            return cls.infinity()
        return cls.finite(GaussianRational.parse(literal))

    @property
    def is_infinite(self) -> bool:
        return self.b.is_zero

    @property
    def value(self) -> GaussianRational:
        if self.is_infinite:
            raise ValueError("the point at infinity has no affine coordinate")
        return self.a

    def sort_key(self) -> Tuple[int, Fraction, Fraction]:
        if self.is_infinite:
            return (1, Fraction(0), Fraction(0))
        return (0, self.a.re, self.a.im)

    def to_json(self) -> Any:
        return INFINITY_LITERAL if self.is_infinite else self.a.to_json()

    def __str__(self) -> str:
        return "inf" if self.is_infinite else str(self.a)


INFINITY = ProjectivePoint.infinity()

__all__ = ["INFINITY", "ProjectivePoint"]
