"""Möbius transformations over Q(i)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from core.errors import InvalidInput
from exactnum.gaussian import ONE, ZERO, GaussianRational
from exactnum.points import ProjectivePoint

G = GaussianRational


@dataclass(frozen=True)
class MobiusMap:
    """``z -> (a z + b) / (c z + d)``, scaled so the first nonzero entry is 1."""

    a: GaussianRational
    b: GaussianRational
    c: GaussianRational
    d: GaussianRational

    def __post_init__(self) -> None:
        entries = [G.coerce(x) for x in (self.a, self.b, self.c, self.d)]
        if (entries[0] * entries[3] - entries[1] * entries[2]).is_zero:
            raise InvalidInput("Möbius matrix must have nonzero determinant")
        lead = next(x for x in entries if not x.is_zero)
        entries = [x / lead for x in entries]
        for name, value in zip("abcd", entries):
            object.__setattr__(self, name, value)

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def scaling(cls, factor: GaussianRational) -> "MobiusMap":
        return cls(G.coerce(factor), ZERO, ZERO, ONE)

    @classmethod
    def translation(cls, shift: GaussianRational) -> "MobiusMap":
        return cls(ONE, G.coerce(shift), ZERO, ONE)

    @classmethod
    def from_triples(
        cls,
        source: Sequence[ProjectivePoint],
        target: Sequence[ProjectivePoint],
    ) -> "MobiusMap":
        """The unique map sending ``source[k]`` to ``target[k]`` for k = 0, 1, 2."""

        return _frame(target).compose_after(_frame(source).inverse())

    @property
    def matrix(self) -> Tuple[GaussianRational, GaussianRational, GaussianRational, GaussianRational]:
        return (self.a, self.b, self.c, self.d)

    @property
    def determinant(self) -> GaussianRational:
        return self.a * self.d - self.b * self.c

    @property
    def is_identity(self) -> bool:
        return self == MobiusMap.identity()

    def __call__(self, point: ProjectivePoint) -> ProjectivePoint:
        x, y = point.a, point.b
        return ProjectivePoint(self.a * x + self.b * y, self.c * x + self.d * y)

    def compose_after(self, inner: "MobiusMap") -> "MobiusMap":
        """``self ∘ inner`` (apply ``inner`` first)."""

        a, b, c, d = self.matrix
        e, f, g, h = inner.matrix
        return MobiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def sort_key(self) -> Tuple:
        return tuple(x.sort_key() for x in self.matrix)

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json(), "c": self.c.to_json(), "d": self.d.to_json()}

    def __str__(self) -> str:
        return f"z -> ({self.a}*z + {self.b})/({self.c}*z + {self.d})"


def _frame(points: Sequence[ProjectivePoint]) -> MobiusMap:
    """Map sending inf, 0, 1 to the three given distinct points."""

    if len(points) != 3 or len(set(points)) != 3:
        raise InvalidInput("a Möbius frame needs three distinct points")
    p1, p2, p3 = points
    # lambda1 * v1 + lambda2 * v2 = v3, solved by Cramer's rule
    det = p1.a * p2.b - p2.a * p1.b
    lam1 = (p3.a * p2.b - p2.a * p3.b) / det
    lam2 = (p1.a * p3.b - p3.a * p1.b) / det
    return MobiusMap(lam1 * p1.a, lam2 * p2.a, lam1 * p1.b, lam2 * p2.b)


__all__ = ["MobiusMap"]
