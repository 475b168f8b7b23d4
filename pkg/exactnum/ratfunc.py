"""Rational functions over Q(i) on top of sympy's ``Poly``.

The canonical form is numerator/denominator coprime with a monic
denominator, so two functions are equal iff their canonical pairs are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import sympy
from sympy import Poly
from sympy.polys.domains import QQ_I

from exactnum.gaussian import ONE, ZERO, GaussianRational

Z = sympy.Symbol("z")


def _const(value: GaussianRational) -> Poly:
    return Poly(value.to_sympy(), Z, domain=QQ_I)


def _linear(alpha: GaussianRational, beta: GaussianRational) -> Poly:
    return Poly(alpha.to_sympy() * Z + beta.to_sympy(), Z, domain=QQ_I)


def ascending_coefficients(poly: Poly) -> List[GaussianRational]:
    return [GaussianRational.from_sympy(c) for c in reversed(poly.all_coeffs())]


@dataclass(frozen=True)
class RationalFunction:
    numerator: Poly
    denominator: Poly

    @classmethod
    def create(cls, numerator: Poly, denominator: Poly) -> "RationalFunction":
        if denominator.is_zero:
            raise ZeroDivisionError("zero denominator")
        if numerator.is_zero:
            return cls(Poly(0, Z, domain=QQ_I), Poly(1, Z, domain=QQ_I))
        common = numerator.gcd(denominator)
        numerator = numerator.exquo(common)
        denominator = denominator.exquo(common)
        lead = denominator.LC()
        return cls(numerator.quo_ground(lead), denominator.quo_ground(lead))

    @classmethod
    def constant(cls, value: GaussianRational) -> "RationalFunction":
        return cls.create(_const(value), Poly(1, Z, domain=QQ_I))

    @classmethod
    def from_factored(
        cls,
        leading: GaussianRational,
        factors: Iterable[Tuple[GaussianRational, int]],
    ) -> "RationalFunction":
        """``leading * prod (z - p)^e``."""

        num = _const(leading)
        den = Poly(1, Z, domain=QQ_I)
        for point, exponent in factors:
            linear = _linear(ONE, -point)
            if exponent > 0:
                num = num * linear**exponent
            elif exponent < 0:
                den = den * linear ** (-exponent)
        return cls.create(num, den)

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.create(self.numerator * other.numerator, self.denominator * other.denominator)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.create(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self) -> int:
        return hash((tuple(self.numerator.all_coeffs()), tuple(self.denominator.all_coeffs())))

    def compose_mobius(
        self,
        a: GaussianRational,
        b: GaussianRational,
        c: GaussianRational,
        d: GaussianRational,
    ) -> "RationalFunction":
        """``R((a z + b) / (c z + d))``."""

        if self.is_zero:
            return self
        top = _linear(a, b)
        bottom = _linear(c, d)

        def homogenize(poly: Poly) -> Tuple[Poly, int]:
            degree = poly.degree()
            acc = Poly(0, Z, domain=QQ_I)
            for power, coeff in enumerate(ascending_coefficients(poly)):
                if coeff.is_zero:
                    continue
                acc = acc + _const(coeff) * top**power * bottom ** (degree - power)
            return acc, degree

        num, n = homogenize(self.numerator)
        den, m = homogenize(self.denominator)
        if m > n:
            num = num * bottom ** (m - n)
        elif n > m:
            den = den * bottom ** (n - m)
        return RationalFunction.create(num, den)

    def laurent_coefficient(self, point: GaussianRational, index: int) -> GaussianRational:
        """Coefficient of ``(z - point)^index`` in the Laurent expansion."""

        if self.is_zero:
            return ZERO
        shift = _linear(ONE, point)
        num = ascending_coefficients(self.numerator.compose(shift))
        den = ascending_coefficients(self.denominator.compose(shift))
        num_val = next(k for k, c in enumerate(num) if not c.is_zero)
        den_val = next(k for k, c in enumerate(den) if not c.is_zero)
        num, den = num[num_val:], den[den_val:]
        position = index - (num_val - den_val)
        if position < 0:
            return ZERO
        return _series_quotient(num, den, position)[position]

    def __str__(self) -> str:
        return f"({self.numerator.as_expr()})/({self.denominator.as_expr()})"


def _series_quotient(
    num: Sequence[GaussianRational], den: Sequence[GaussianRational], order: int
) -> List[GaussianRational]:
    """First ``order + 1`` power series coefficients of ``num / den``; ``den[0] != 0``."""

    inverse_lead = den[0].inverse()
    out: List[GaussianRational] = []
    for k in range(order + 1):
        acc = num[k] if k < len(num) else ZERO
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inverse_lead)
    return out


__all__ = ["RationalFunction", "Z", "ascending_coefficients"]
