"""Exact Gaussian rationals, the field Q(i)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any, Dict, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import (
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from core.errors import InvalidInput
from core.serialization import format_rational, parse_rational

_TRANSFORMS = standard_transformations + (implicit_multiplication_application,)
_LOCALS = {"i": sympy.I, "I": sympy.I, "j": sympy.I}

Scalar = Union["GaussianRational", Fraction, int]


def _as_fraction(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)
    if numerator is not None and denominator is not None and not isinstance(value, float):
        return Fraction(int(numerator), int(denominator))
    raise TypeError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class GaussianRational:
    """``re + im*i`` with ``Fraction`` parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    # construction -----------------------------------------------------
    @classmethod
    def coerce(cls, value: Any) -> "GaussianRational":
        """Like ``parse``, but unsupported types raise TypeError."""

        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (str, dict)):
            return cls.parse(value)
        return cls(_as_fraction(value), Fraction(0))

    @classmethod
    def parse(cls, literal: Union[str, Rational, Dict[str, Any], "GaussianRational"]) -> "GaussianRational":
        """Parse ``"1/2 - 3i"``, ``{"re": "1/2", "im": "-3"}`` or an exact rational."""

        if isinstance(literal, GaussianRational):
            return literal
        if isinstance(literal, bool) or isinstance(literal, float):
            raise InvalidInput(f"not an exact Gaussian rational: {literal!r}")
        if isinstance(literal, (Rational, sympy.Rational)):
            return cls(_as_fraction(literal))
        if isinstance(literal, dict):
            try:
                return cls(parse_rational(literal.get("re", "0")), parse_rational(literal.get("im", "0")))
            except (TypeError, ValueError) as exc:
                raise InvalidInput(f"bad Gaussian rational {literal!r}: {exc}") from exc
        if not isinstance(literal, str):
            raise InvalidInput(f"not an exact Gaussian rational: {literal!r}")
        text = literal.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise InvalidInput(f"not an exact Gaussian rational: {literal!r}")
        try:
            expr = parse_expr(text, local_dict=_LOCALS, transformations=_TRANSFORMS)
        except Exception as exc:  # sympy raises a mix of SyntaxError/TokenError/TypeError
            raise InvalidInput(f"cannot parse {literal!r}") from exc
        return cls.from_sympy(expr)

    @classmethod
    def from_sympy(cls, expr: Any) -> "GaussianRational":
        real, imag = sympy.expand(sympy.sympify(expr)).as_real_imag()
        if not (isinstance(real, sympy.Rational) and isinstance(imag, sympy.Rational)):
            raise InvalidInput(f"{expr} is not an element of Q(i)")
        return cls(_as_fraction(real), _as_fraction(imag))

    def to_sympy(self) -> sympy.Expr:
        return sympy.Rational(self.re.numerator, self.re.denominator) + sympy.I * sympy.Rational(
            self.im.numerator, self.im.denominator
        )

    # arithmetic -------------------------------------------------------
    def __add__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __mul__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    @property
    def is_zero(self) -> bool:
        return not self

    def sort_key(self) -> Tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def to_json(self) -> Dict[str, str]:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    def __str__(self) -> str:
        if self.im == 0:
            return format_rational(self.re)
        imag = format_rational(abs(self.im))
        imag = "i" if imag == "1" else f"{imag}*i"
        if self.re == 0:
            return imag if self.im > 0 else f"-{imag}"
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)}{sign}{imag}"

    def __repr__(self) -> str:
        return f"GaussianRational({self})"


ZERO = GaussianRational(Fraction(0), Fraction(0))
ONE = GaussianRational(Fraction(1), Fraction(0))
I = GaussianRational(Fraction(0), Fraction(1))

__all__ = ["GaussianRational", "I", "ONE", "ZERO"]
