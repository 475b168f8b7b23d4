"""Integer lattices in Hermite normal form, optionally with a common denominator."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from core.errors import InvalidInput, NotALattice
from core.serialization import format_rational

LOGGER = logging.getLogger(__name__)

Number = Union[int, Fraction]
Row = Tuple[int, ...]


def _hnf_rows(rows: Sequence[Sequence[int]], dim: int) -> Tuple[Row, ...]:
    """Row-style HNF: echelon form, positive pivots, entries above pivots in [0, pivot)."""

    work = [list(r) for r in rows if any(r)]
    pivots: List[List[int]] = []
    pivot_cols: List[int] = []
    for col in range(dim):
        active = [r for r in work if r[col] != 0]
        passive = [r for r in work if r[col] == 0]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            head = active[0]
            survivors = [head]
            for r in active[1:]:
                q = r[col] // head[col]
                reduced = [x - q * y for x, y in zip(r, head)]
                if reduced[col] != 0:
                    survivors.append(reduced)
                elif any(reduced):
                    passive.append(reduced)
            active = survivors
        if active:
            head = active[0]
            if head[col] < 0:
                head = [-x for x in head]
            pivots.append(head)
            pivot_cols.append(col)
        work = [r for r in passive if any(r)]

    for i, col in enumerate(pivot_cols):
        p = pivots[i][col]
        for k in range(i):
            q = pivots[k][col] // p
            if q:
                pivots[k] = [x - q * y for x, y in zip(pivots[k], pivots[i])]
    return tuple(tuple(r) for r in pivots)


@dataclass(frozen=True)
class IntegerLattice:
    """Z-span of ``basis / scale`` in Q^dim.

    ``basis`` is the HNF of the integer rows; ``gcd(entries, scale) == 1``
    so equal lattices have equal fields.
    """

    dim: int
    basis: Tuple[Row, ...] = ()
    scale: int = 1

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise InvalidInput("lattice dimension must be non-negative")
        if self.scale < 1:
            raise InvalidInput("lattice scale must be a positive integer")
        for row in self.basis:
            if len(row) != self.dim:
                raise InvalidInput(f"row {row} does not have dimension {self.dim}")

    # construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], dim: int) -> "IntegerLattice":
        return cls.from_rational_rows(rows, dim)

    @classmethod
    def from_rational_rows(cls, rows: Iterable[Sequence[Number]], dim: int) -> "IntegerLattice":
        frows = [[Fraction(x) for x in r] for r in rows]
        for r in frows:
            if len(r) != dim:
                raise InvalidInput(f"row {r} does not have dimension {dim}")
        scale = reduce(lcm, (x.denominator for r in frows for x in r), 1)
        int_rows = [[int(x * scale) for x in r] for r in frows]
        basis = _hnf_rows(int_rows, dim)
        common = reduce(gcd, (x for r in basis for x in r), scale)
        if common > 1:
            basis = tuple(tuple(x // common for x in r) for r in basis)
            scale //= common
        if not basis:
            scale = 1
        return cls(dim=dim, basis=basis, scale=scale)

    @classmethod
    def zero(cls, dim: int) -> "IntegerLattice":
        return cls(dim=dim)

    @classmethod
    def standard(cls, dim: int) -> "IntegerLattice":
        return cls.from_rows([[int(i == j) for j in range(dim)] for i in range(dim)], dim)

    # queries ----------------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def rational_basis(self) -> List[List[Fraction]]:
        return [[Fraction(x, self.scale) for x in r] for r in self.basis]

    def determinant(self) -> int:
        """Integer determinant of a full-rank basis (before scaling)."""

        if self.rank != self.dim:
            raise NotALattice(f"rank {self.rank} lattice in dimension {self.dim} has no determinant")
        if self.dim == 0:
            return 1
        return abs(int(sympy.Matrix(self.basis).det()))

    def coordinates(self, vector: Sequence[Number]) -> Optional[List[int]]:
        """Integer coordinates of ``vector`` in the basis, or None if outside."""

        if len(vector) != self.dim:
            raise InvalidInput(f"vector {vector} does not have dimension {self.dim}")
        scaled = [Fraction(x) * self.scale for x in vector]
        if any(x.denominator != 1 for x in scaled):
            return None
        rest = [int(x) for x in scaled]
        coords: List[int] = []
        for row in self.basis:
            col = next(k for k, x in enumerate(row) if x != 0)
            if rest[col] % row[col] != 0:
                return None
            q = rest[col] // row[col]
            coords.append(q)
            rest = [x - q * y for x, y in zip(rest, row)]
        if any(rest):
            return None
        return coords

    def contains(self, vector: Sequence[Number]) -> bool:
        return self.coordinates(vector) is not None

    def contains_lattice(self, other: "IntegerLattice") -> bool:
        return all(self.contains(r) for r in other.rational_basis())

    def index_in(self, ambient: "IntegerLattice") -> int:
        """Index ``[ambient : self]`` for a same-rank sublattice."""

        if not ambient.contains_lattice(self):
            raise InvalidInput("not a sublattice")
        if self.rank != ambient.rank:
            raise NotALattice("index is infinite: ranks differ")
        if self.rank == 0:
            return 1
        coords = [ambient.coordinates(r) for r in self.rational_basis()]
        return abs(int(sympy.Matrix(coords).det()))

    def covolume2(self) -> Fraction:
        """Euclidean covolume of a rank-2 lattice in Q^2 (coordinates re, im)."""

        if self.dim != 2 or self.rank < 2:
            raise NotALattice(f"covolume needs a rank-2 lattice in dimension 2, got rank {self.rank}")
        return Fraction(self.determinant(), self.scale * self.scale)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "rank": self.rank,
            "scale": self.scale,
            "basis": [[format_rational(x) for x in r] for r in self.rational_basis()],
        }


def hnf(rows: Iterable[Sequence[int]], dim: Optional[int] = None) -> IntegerLattice:
    """HNF of the Z-span of integer ``rows``."""

    rows = [list(r) for r in rows]
    if dim is None:
        if not rows:
            raise InvalidInput("dimension is required for an empty row list")
        dim = len(rows[0])
    return IntegerLattice.from_rows(rows, dim)


def covolume2(lattice: IntegerLattice) -> Fraction:
    return lattice.covolume2()


__all__ = ["IntegerLattice", "covolume2", "hnf"]
