"""Branched projective structures obtained by filling the poles of a
second-kind translation surface.

A zero of order ``m`` is a branch point of order ``m``. Near a pole of order
``p >= 2`` with zero residue the developing map is a degree ``p - 1`` map to
a neighbourhood of infinity, so the pole becomes a chart at infinity with
branch order ``p - 2``. Only branch data and flags are stored.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from bounds.signatures import HURWITZ_FACTOR
from core.errors import InternalInconsistency, InvalidInput, NonZeroResidue
from core.serialization import canonical_hash
from cover.periods import PeriodLattice, period_lattice
from cover.surface import CoveredSurface
from cover.translations import CertifiedAut
from spherediff.differential import DifferentialKind

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class BranchPoint:
    count: int
    order: int
    at_infinity: bool = False

    def __post_init__(self) -> None:
        if self.count < 1:
            raise InvalidInput("branch point counts must be positive")
        if self.order < 0 or (self.order == 0 and not self.at_infinity):
            raise InvalidInput(f"invalid branch order {self.order}")

    @property
    def pole_order(self) -> int:
        """Order of the pole that was filled, for charts at infinity."""

        return -(self.order + 2)

    def to_json(self) -> dict:
        return {"count": self.count, "order": self.order, "at_infinity": self.at_infinity}


@dataclass(frozen=True)
class BranchedStructureData:
    genus: int
    records: Tuple[BranchPoint, ...]
    holonomy_trivial: bool
    source_hash: str = ""

    def finite_orders(self) -> List[int]:
        return [r.order for r in self.records if not r.at_infinity for _ in range(r.count)]

    def infinity_charts(self) -> List[BranchPoint]:
        return [r for r in self.records if r.at_infinity]

    def gauss_bonnet_sum(self) -> int:
        """Zero orders plus the reconstructed pole orders."""

        return sum(r.count * (r.pole_order if r.at_infinity else r.order) for r in self.records)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "records": [r.to_json() for r in self.records],
            "holonomy_trivial": self.holonomy_trivial,
            "source_hash": self.source_hash,
        }


def extend_to_bps(surface: CoveredSurface, periods: Optional[PeriodLattice] = None) -> BranchedStructureData:
    if surface.kind is DifferentialKind.THIRD:
        raise NonZeroResidue("poles with nonzero residue do not close up to projective charts")

    counts: Counter = Counter()
    for b in surface.branches:
        m = b.upstairs_order
        if m > 0:
            counts[(False, m)] += b.sheets
        elif m < 0:
            if m == -1:
                raise NonZeroResidue(f"simple pole over {b.mark} cannot have zero residue")
            counts[(True, -m - 2)] += b.sheets
    records = tuple(
        BranchPoint(count=n, order=k, at_infinity=inf) for (inf, k), n in sorted(counts.items())
    )
    if periods is None:
        periods = period_lattice(surface)
    data = BranchedStructureData(
        genus=surface.genus,
        records=records,
        holonomy_trivial=periods.is_zero,
        source_hash=canonical_hash({"spec": surface.spec.to_json(), "summary": surface.summary()}),
    )
    surface.checks.require(
        "projective_round_trip",
        data.gauss_bonnet_sum() == 2 * surface.genus - 2,
        f"sum over branch data {data.gauss_bonnet_sum()} against 2g-2 = {2 * surface.genus - 2}",
    )
    LOGGER.info(
        "Extended to a branched projective structure: %d branch points, %d charts at infinity",
        sum(r.count for r in records if not r.at_infinity),
        sum(r.count for r in data.infinity_charts()),
    )
    return data


def troyanov_flat_check(genus: int, orders: Iterable[int]) -> bool:
    """``2 - 2g + sum k_i == 0`` for cone angles ``2*pi*(k_i + 1)``."""

    orders = [int(k) for k in orders]
    if genus < 0 or any(k < 0 for k in orders):
        raise InvalidInput("genus and branch orders must be non-negative")
    return 2 - 2 * genus + sum(orders) == 0


def projective_automorphism_count(
    surface: CoveredSurface,
    aut: CertifiedAut,
    structure: Optional[BranchedStructureData] = None,
) -> CertifiedAut:
    """The certified translation count, carried over to the projective structure."""

    if structure is None:
        extend_to_bps(surface)
    carried = aut.with_note("translations extend over the filled poles as projective automorphisms")
    if (carried.lower, carried.upper, carried.status) != (aut.lower, aut.upper, aut.status):
        raise InternalInconsistency("projective count must not change the certification")
    return carried


def is_hurwitz_structure(genus: int, aut: CertifiedAut) -> bool:
    return genus >= 2 and aut.is_exact and aut.value == HURWITZ_FACTOR * (genus - 1)


__all__ = [
    "BranchPoint",
    "BranchedStructureData",
    "extend_to_bps",
    "is_hurwitz_structure",
    "projective_automorphism_count",
    "troyanov_flat_check",
]
