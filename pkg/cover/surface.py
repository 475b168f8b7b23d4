"""Invariants of the covering translation surface ``(X, pi^* xi)``."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from bounds.signatures import BranchSignature, riemann_hurwitz
from core.checks import CheckLedger
from core.errors import NotAQuotientOrder
from cover.spec import CoverSpec
from exactnum.gaussian import ZERO, GaussianRational
from exactnum.points import ProjectivePoint
from spherediff.differential import DifferentialKind, kind_of

LOGGER = logging.getLogger(__name__)

DESCENT_CONVENTION_NOTE = (
    "descent convention: an upstairs order m over local degree d comes from base order k "
    "with d*(k+1) = m+1; reading the base order as m/d fails the Gauss-Bonnet cross-check"
)


def quotient_orders(m: int, d: int) -> int:
    """Base order ``k`` with ``d (k + 1) = m + 1``."""

    if d < 1:
        raise NotAQuotientOrder(f"local degree must be positive, got {d}")
    if (m + 1) % d:
        raise NotAQuotientOrder(f"{d} does not divide {m}+1")
    return (m + 1) // d - 1


@dataclass(slots=True)
class BranchRecord:
    """Lift of one marked point: ``sheets`` preimages of equal order and residue."""

    mark: ProjectivePoint
    base_order: int
    base_residue: GaussianRational
    local_degree: int
    sheets: int
    upstairs_order: int
    upstairs_residue: GaussianRational

    def to_json(self) -> dict:
        return {
            "mark": self.mark.to_json(),
            "base_order": self.base_order,
            "base_residue": self.base_residue.to_json(),
            "local_degree": self.local_degree,
            "sheets": self.sheets,
            "upstairs_order": self.upstairs_order,
            "upstairs_residue": self.upstairs_residue.to_json(),
        }


@dataclass(slots=True)
class CoveredSurface:
    spec: CoverSpec
    genus: int
    branches: Tuple[BranchRecord, ...]
    kind: DifferentialKind
    deck_order: int
    checks: CheckLedger = field(default_factory=CheckLedger)

    def singularity_table(self) -> Dict[int, int]:
        """Upstairs order -> number of points, regular points omitted."""

        table: Counter = Counter()
        for b in self.branches:
            if b.upstairs_order != 0:
                table[b.upstairs_order] += b.sheets
        return dict(sorted(table.items(), reverse=True))

    def gauss_bonnet_sum(self) -> int:
        return sum(b.sheets * b.upstairs_order for b in self.branches)

    def upstairs_residue_sum(self) -> GaussianRational:
        total = ZERO
        for b in self.branches:
            total = total + b.upstairs_residue * b.sheets
        return total

    def recovered_base_orders(self) -> List[int]:
        return [quotient_orders(b.upstairs_order, b.local_degree) for b in self.branches]

    def signature(self) -> BranchSignature:
        return BranchSignature.from_local_degrees(self.deck_order, 0, [b.local_degree for b in self.branches])

    def puncture_residues(self) -> List[GaussianRational]:
        """Residue at every upstairs pole, one entry per point."""

        out: List[GaussianRational] = []
        for b in self.branches:
            if b.upstairs_order < 0:
                out.extend([b.upstairs_residue] * b.sheets)
        return out

    def summary(self) -> dict:
        return {
            "genus": self.genus,
            "deck_order": self.deck_order,
            "kind": self.kind.value,
            "singularities": {str(k): v for k, v in self.singularity_table().items()},
            "gauss_bonnet_sum": self.gauss_bonnet_sum(),
            "branches": [b.to_json() for b in self.branches],
        }


def covered_surface(spec: CoverSpec, ledger: CheckLedger | None = None) -> CoveredSurface:
    """Genus and singularity data of the regular cover described by ``spec``."""

    ledger = ledger if ledger is not None else CheckLedger()
    xi = spec.base
    n = spec.group.order
    branches = []
    for mark, x in zip(spec.marks, spec.monodromy):
        k = xi.order_at(mark)
        res = xi.residue_at(mark)
        d = x.order()
        branches.append(
            BranchRecord(
                mark=mark,
                base_order=k,
                base_residue=res,
                local_degree=d,
                sheets=n // d,
                upstairs_order=d * (k + 1) - 1,
                upstairs_residue=res * d,
            )
        )
    ledger.require(
        "sheets_times_degree",
        all(b.sheets * b.local_degree == n for b in branches),
        f"s_i * d_i = {n}",
    )

    signature = BranchSignature.from_local_degrees(n, 0, [b.local_degree for b in branches])
    genus = riemann_hurwitz(signature)
    gauss_bonnet = sum(b.sheets * b.upstairs_order for b in branches)
    ledger.require(
        "riemann_hurwitz_equals_gauss_bonnet",
        gauss_bonnet == 2 * genus - 2,
        f"Riemann-Hurwitz genus {genus}, Gauss-Bonnet sum {gauss_bonnet}",
    )

    residue_total = ZERO
    for b in branches:
        residue_total = residue_total + b.upstairs_residue * b.sheets
    ledger.require("upstairs_residue_sum_zero", residue_total.is_zero, f"sum = {residue_total}")

    upstairs_kind = (
        DifferentialKind.THIRD
        if any(not b.upstairs_residue.is_zero for b in branches if b.upstairs_order < 0)
        else DifferentialKind.SECOND
    )
    base_kind = kind_of(xi)
    ledger.require("kind_preserved", upstairs_kind == base_kind, f"{base_kind.value} -> {upstairs_kind.value}")
    ledger.require(
        "descent_round_trip",
        all(quotient_orders(b.upstairs_order, b.local_degree) == b.base_order for b in branches),
        "quotient orders recover the base orders",
    )

    surface = CoveredSurface(
        spec=spec,
        genus=genus,
        branches=tuple(branches),
        kind=upstairs_kind,
        deck_order=n,
        checks=ledger,
    )
    LOGGER.info("Cover of degree %d built: genus %d, kind %s", n, genus, upstairs_kind.value)
    return surface


__all__ = [
    "BranchRecord",
    "CoveredSurface",
    "DESCENT_CONVENTION_NOTE",
    "covered_surface",
    "quotient_orders",
]
