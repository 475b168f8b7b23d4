"""Period lattice of a cover, in units of 2*pi*i."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Sequence

from core.checks import CheckLedger
from cover.surface import CoveredSurface
from exactnum.gaussian import GaussianRational
from exactnum.lattice import IntegerLattice
from groups.kernel import kernel_abelianization

LOGGER = logging.getLogger(__name__)

PERIOD_UNIT = "2*pi*i"


def residue_lattice(residues: Sequence[GaussianRational]) -> IntegerLattice:
    """Z-span of the given values as vectors (re, im)."""

    return IntegerLattice.from_rational_rows([[r.re, r.im] for r in residues], 2)


@dataclass(frozen=True)
class PeriodLattice:
    """The set ``{2*pi*i * v : v in lattice}``; the unit is never expanded."""

    lattice: IntegerLattice

    @property
    def is_zero(self) -> bool:
        return self.lattice.is_zero

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def generators(self) -> List[GaussianRational]:
        return [GaussianRational(re, im) for re, im in self.lattice.rational_basis()]

    def contains(self, value: GaussianRational) -> bool:
        return self.lattice.contains([value.re, value.im])

    def to_json(self) -> dict:
        return {
            "unit": PERIOD_UNIT,
            "rank": self.rank,
            "generators": [g.to_json() for g in self.generators()],
        }


def base_image(surface: CoveredSurface) -> PeriodLattice:
    """Image of the base character: span of the residues at the marks."""

    return PeriodLattice(residue_lattice([b.base_residue for b in surface.branches]))


def period_lattice(surface: CoveredSurface, ledger: CheckLedger | None = None) -> PeriodLattice:
    """Image of the period character of ``pi^* xi``.

    The kernel of ``F_{m-1} -> G`` is abelianized and pushed forward along
    ``n -> sum n_j res_j``.
    """

    ledger = ledger if ledger is not None else surface.checks
    spec = surface.spec
    images = list(spec.monodromy[:-1])
    residues = [b.base_residue for b in surface.branches[:-1]]
    kernel = kernel_abelianization(spec.group, images, ledger=ledger)
    rows = []
    for row in kernel.rational_basis():
        value = GaussianRational(0, 0)
        for n_j, res in zip(row, residues):
            value = value + res * n_j
        rows.append([value.re, value.im])
    periods = PeriodLattice(IntegerLattice.from_rational_rows(rows, 2))

    ambient = base_image(surface)
    ledger.require(
        "periods_inside_base_image",
        ambient.lattice.contains_lattice(periods.lattice),
        "image of the cover character lies in the base image",
    )
    if not ambient.is_zero:
        index = periods.lattice.index_in(ambient.lattice)
        ledger.require(
            "period_index_divides_order",
            surface.deck_order % index == 0,
            f"index {index} divides {surface.deck_order}",
        )
    LOGGER.debug("Period lattice rank %d", periods.rank)
    return periods


__all__ = ["PERIOD_UNIT", "PeriodLattice", "base_image", "period_lattice", "residue_lattice"]
