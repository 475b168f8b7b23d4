"""Realization certificates: every verdict of the cover pipeline in one record."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from bounds.signatures import BoundCheck, BoundVerdict, Tristate, check_translation_bound
from core.config_loader import get_config
from core.serialization import canonical_hash, to_jsonable
from cover.periods import PeriodLattice, period_lattice
from cover.spec import CoverSpec
from cover.surface import DESCENT_CONVENTION_NOTE, CoveredSurface, covered_surface
from cover.translations import CertifiedAut, is_large, translation_group
from projective.structure import (
    BranchedStructureData,
    extend_to_bps,
    is_hurwitz_structure,
    projective_automorphism_count,
)
from spherediff.differential import DifferentialKind

LOGGER = logging.getLogger(__name__)

NOT_APPLICABLE = "NotApplicable"


@dataclass(slots=True)
class RealizationCertificate:
    pipeline: str
    spec: CoverSpec
    surface: CoveredSurface
    periods: PeriodLattice
    aut: CertifiedAut
    large: Tristate
    bound: Optional[BoundCheck] = None
    projective: Optional[BranchedStructureData] = None
    hurwitz_structure: bool = False
    inputs: Dict[str, Any] = field(default_factory=dict)
    notes: Tuple[str, ...] = ()
    schema_version: str = ""

    @property
    def genus(self) -> int:
        return self.surface.genus

    @property
    def bound_verdict(self) -> str:
        return self.bound.verdict.value if self.bound is not None else NOT_APPLICABLE

    def construction(self) -> Dict[str, Any]:
        """Everything needed to rebuild the cover without searching again."""

        payload = dict(self.inputs)
        payload.update(
            {
                "pipeline": self.pipeline,
                "group": {
                    "degree": self.spec.group.degree,
                    "generators": [g.to_json() for g in self.spec.group.generators],
                },
                "differential": self.spec.base.to_json(),
                "marks": [p.to_json() for p in self.spec.marks],
                "monodromy": [x.to_json() for x in self.spec.monodromy],
            }
        )
        return payload

    def body(self) -> Dict[str, Any]:
        projective = None
        if self.projective is not None:
            projective = self.projective.to_json()
            projective["hurwitz_structure"] = self.hurwitz_structure
        return to_jsonable(
            {
                "schema_version": self.schema_version,
                "construction": self.construction(),
                "group_order": self.spec.group.order,
                "genus": self.genus,
                "kind": self.surface.kind,
                "surface": self.surface.summary(),
                "period_lattice": self.periods.to_json(),
                "aut": str(self.aut.value) if self.aut.is_exact else f"[{self.aut.lower}, {self.aut.upper}]",
                "aut_certificate": self.aut.to_json(),
                "is_large": self.large,
                "bound": self.bound_verdict,
                "bound_check": self.bound.to_json() if self.bound is not None else None,
                "projective": projective,
                "checks": self.surface.checks.to_list(),
                "notes": list(self.notes),
            }
        )

    def to_dict(self) -> Dict[str, Any]:
        payload = self.body()
        payload["hash"] = canonical_hash(payload)
        return payload


def certify_cover(
    spec: CoverSpec,
    pipeline: str,
    inputs: Optional[Dict[str, Any]] = None,
    notes: Tuple[str, ...] = (),
) -> RealizationCertificate:
    """Run the full verdict chain on a cover: surface, periods, translations,
    bounds and, for second-kind covers, the projective extension."""

    surface = covered_surface(spec)
    periods = period_lattice(surface)
    aut = translation_group(surface)
    large = is_large(surface, aut)

    bound = None
    if surface.genus >= 2:
        size = aut.value if aut.is_exact else aut.lower
        bound = check_translation_bound(surface.genus, large, size)
        surface.checks.require(
            "within_bounds", bound.verdict is not BoundVerdict.VIOLATION, f"{size} <= {bound.bound}"
        )

    projective = None
    hurwitz = False
    if surface.kind is DifferentialKind.SECOND:
        projective = extend_to_bps(surface, periods)
        aut = projective_automorphism_count(surface, aut, projective)
        hurwitz = is_hurwitz_structure(surface.genus, aut)

    certificate = RealizationCertificate(
        pipeline=pipeline,
        spec=spec,
        surface=surface,
        periods=periods,
        aut=aut,
        large=large,
        bound=bound,
        projective=projective,
        hurwitz_structure=hurwitz,
        inputs=dict(inputs or {}),
        notes=tuple(notes) + (DESCENT_CONVENTION_NOTE,),
        schema_version=get_config().certificates.schema_version,
    )
    LOGGER.info(
        "Certificate ready: genus %d, Aut %s (%s), bound %s",
        surface.genus,
        aut.value if aut.is_exact else f"[{aut.lower}, {aut.upper}]",
        aut.status.value,
        certificate.bound_verdict,
    )
    return certificate


__all__ = ["NOT_APPLICABLE", "RealizationCertificate", "certify_cover"]
