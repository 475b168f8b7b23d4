"""Meromorphic differentials on the Riemann sphere in exact factored form."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Tuple

from core.errors import InternalInconsistency, InvalidInput
from exactnum.gaussian import ONE, ZERO, GaussianRational
from exactnum.points import INFINITY, ProjectivePoint
from exactnum.ratfunc import RationalFunction
from spherediff.mobius import MobiusMap

LOGGER = logging.getLogger(__name__)

Factor = Tuple[GaussianRational, int]


class DifferentialKind(str, Enum):
    """Kinds of meromorphic differentials; the first kind cannot occur on the sphere."""

    FIRST = "first"
    SECOND = "second"
    THIRD = "third"


@dataclass(frozen=True)
class SphereDifferential:
    """``leading * prod (z - p)^e dz`` with distinct finite points ``p``.

    The order at infinity is derived: ``-2 - sum(e)``.
    """

    leading: GaussianRational
    factors: Tuple[Factor, ...] = ()

    def __post_init__(self) -> None:
        leading = GaussianRational.coerce(self.leading)
        if leading.is_zero:
            raise InvalidInput("leading coefficient must be nonzero")
        merged: Dict[GaussianRational, int] = {}
        for point, exponent in self.factors:
            point = GaussianRational.coerce(point)
            if point in merged:
                raise InvalidInput(f"factor point {point} listed twice")
            if int(exponent) == 0:
                raise InvalidInput(f"factor at {point} has exponent 0")
            merged[point] = int(exponent)
        factors = tuple(sorted(merged.items(), key=lambda item: item[0].sort_key()))
        object.__setattr__(self, "leading", leading)
        object.__setattr__(self, "factors", factors)

    @classmethod
    def create(cls, leading: GaussianRational, factors: Iterable[Factor]) -> "SphereDifferential":
        """Like the constructor but merges repeated points and drops zero exponents."""

        merged: Dict[GaussianRational, int] = {}
        for point, exponent in factors:
            point = GaussianRational.coerce(point)
            merged[point] = merged.get(point, 0) + int(exponent)
        return cls(leading, tuple((p, e) for p, e in merged.items() if e != 0))

    @classmethod
    def dz(cls) -> "SphereDifferential":
        return cls(ONE, ())

    # orders -----------------------------------------------------------
    @property
    def order_at_infinity(self) -> int:
        return -2 - sum(e for _, e in self.factors)

    def order_at(self, point: ProjectivePoint) -> int:
        if point.is_infinite:
            return self.order_at_infinity
        return dict(self.factors).get(point.value, 0)

    def singular_points(self) -> List[ProjectivePoint]:
        """Zeros and poles, finite ones first in sort order, then infinity."""

        points = [ProjectivePoint.finite(p) for p, _ in self.factors]
        if self.order_at_infinity != 0:
            points.append(INFINITY)
        return points

    def orders(self) -> Dict[ProjectivePoint, int]:
        return {p: self.order_at(p) for p in self.singular_points()}

    def poles(self) -> List[ProjectivePoint]:
        return [p for p in self.singular_points() if self.order_at(p) < 0]

    # residues ---------------------------------------------------------
    def as_rational_function(self) -> RationalFunction:
        return RationalFunction.from_factored(self.leading, self.factors)

    @cached_property
    def _finite_residues(self) -> Dict[GaussianRational, GaussianRational]:
        func = self.as_rational_function()
        return {p: func.laurent_coefficient(p, -1) for p, e in self.factors if e < 0}

    @cached_property
    def _residue_at_infinity(self) -> GaussianRational:
        total = ZERO
        for value in self._finite_residues.values():
            total = total + value
        at_infinity = -total
        # independent expansion in t = 1/z: xi = -f(1/t) t^-2 dt
        if self.order_at_infinity < 0:
            flipped = self.as_rational_function().compose_mobius(ZERO, ONE, ONE, ZERO)
            direct = -flipped.laurent_coefficient(ZERO, 1)
            if direct != at_infinity:
                raise InternalInconsistency(
                    f"residue theorem failed: -sum finite = {at_infinity}, direct = {direct}"
                )
        elif not at_infinity.is_zero:
            raise InternalInconsistency("nonzero residue sum with a regular point at infinity")
        return at_infinity

    def residue_at(self, point: ProjectivePoint) -> GaussianRational:
        if point.is_infinite:
            return self._residue_at_infinity
        return self._finite_residues.get(point.value, ZERO)

    def residues(self) -> Dict[ProjectivePoint, GaussianRational]:
        return {p: self.residue_at(p) for p in self.poles()}

    def kind(self) -> DifferentialKind:
        return kind_of(self)

    # transport --------------------------------------------------------
    def pullback(self, f: MobiusMap) -> "SphereDifferential":
        return mobius_pullback(f, self)

    def scaled(self, factor: GaussianRational) -> "SphereDifferential":
        return SphereDifferential(self.leading * factor, self.factors)

    def to_json(self) -> dict:
        return {
            "leading": self.leading.to_json(),
            "factors": [{"point": p.to_json(), "exponent": e} for p, e in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SphereDifferential":
        try:
            leading = GaussianRational.parse(data.get("leading", 1))
            factors = [(GaussianRational.parse(f["point"]), int(f["exponent"])) for f in data.get("factors", [])]
        except (KeyError, TypeError, AttributeError) as exc:
            raise InvalidInput(f"malformed differential: {exc}") from exc
        return cls(leading, tuple(factors))

    def __str__(self) -> str:
        parts = [f"({self.leading})"]
        for p, e in self.factors:
            base = "z" if p.is_zero else f"(z - ({p}))"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts) + " dz"


def order_at(xi: SphereDifferential, point: ProjectivePoint) -> int:
    return xi.order_at(point)


def residue_at(xi: SphereDifferential, point: ProjectivePoint) -> GaussianRational:
    return xi.residue_at(point)


def kind_of(xi: SphereDifferential) -> DifferentialKind:
    """Second kind iff every residue vanishes; never first kind on the sphere."""

    if not xi.poles():
        raise InternalInconsistency("a differential on the sphere must have a pole")
    if all(r.is_zero for r in xi.residues().values()):
        return DifferentialKind.SECOND
    return DifferentialKind.THIRD


def mobius_pullback(f: MobiusMap, xi: SphereDifferential) -> SphereDifferential:
    """``f^* xi`` in factored form, cross-checked against direct composition."""

    a, b, c, d = f.matrix
    leading = xi.leading * f.determinant
    factors: List[Factor] = []
    for p, e in xi.factors:
        alpha, beta = a - p * c, b - p * d
        if alpha.is_zero:
            leading = leading * beta**e
        else:
            leading = leading * alpha**e
            factors.append((-beta / alpha, e))
    k_inf = xi.order_at_infinity
    if c.is_zero:
        leading = leading * d**k_inf
    elif k_inf:
        leading = leading * c**k_inf
        factors.append((-d / c, k_inf))
    result = SphereDifferential.create(leading, factors)

    inverse = f.inverse()
    for point, order in result.orders().items():
        if xi.order_at(f(point)) != order:
            raise InternalInconsistency(f"pullback moved order at {point}")
    for point, order in xi.orders().items():
        if result.order_at(inverse(point)) != order:
            raise InternalInconsistency(f"pullback lost the singularity over {point}")

    composed = xi.as_rational_function().compose_mobius(a, b, c, d)
    if c.is_zero:
        jacobian = RationalFunction.from_factored(f.determinant / (d * d), [])
    else:
        jacobian = RationalFunction.from_factored(f.determinant / (c * c), [(-d / c, -2)])
    if composed * jacobian != result.as_rational_function():
        raise InternalInconsistency("factored pullback disagrees with direct composition")
    return result


__all__ = [
    "DifferentialKind",
    "SphereDifferential",
    "kind_of",
    "mobius_pullback",
    "order_at",
    "residue_at",
]
