"""Certified size of the translation group ``Aut(X, omega)``.

The deck group always acts by translations, giving the lower bound. A
translation that is not a deck transformation descends to a nontrivial
automorphism of the marked base, so a trivial base group makes the count
exact; otherwise ``|G| * |Q|`` and the conformal bound cap it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Tuple

from bounds.signatures import HURWITZ_FACTOR, Tristate
from core.errors import CertificationUnknown, InternalInconsistency, UncertifiableBase
from cover.surface import DESCENT_CONVENTION_NOTE, CoveredSurface
from spherediff.automorphisms import AutomorphismSet, marked_automorphisms

LOGGER = logging.getLogger(__name__)


class AutStatus(str, Enum):
    EXACT = "exact"
    BOUNDED = "bounded"


@dataclass(slots=True)
class CertifiedAut:
    lower: int
    upper: int
    status: AutStatus
    witness: AutomorphismSet
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise InternalInconsistency(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.status is AutStatus.EXACT and self.lower != self.upper:
            raise InternalInconsistency("exact status with distinct bounds")

    @property
    def is_exact(self) -> bool:
        return self.status is AutStatus.EXACT

    @property
    def value(self) -> int | None:
        return self.lower if self.is_exact else None

    def with_note(self, note: str) -> "CertifiedAut":
        return replace(self, notes=self.notes + (note,))

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "status": self.status.value,
            "witness": self.witness.to_json(),
            "notes": list(self.notes),
        }


def translation_group(surface: CoveredSurface) -> CertifiedAut:
    spec = surface.spec
    marks = [(p, d) for p, d in zip(spec.marks, spec.local_degrees)]
    base_group = marked_automorphisms(spec.base, marks)
    if base_group.infinite:
        raise UncertifiableBase(
            "the marked base has infinitely many automorphisms; add marks or choose an asymmetric base"
        )
    lower = surface.deck_order
    notes = [DESCENT_CONVENTION_NOTE]
    if base_group.is_trivial:
        notes.append("marked base has only the identity automorphism")
        return CertifiedAut(lower, lower, AutStatus.EXACT, base_group, tuple(notes))

    upper = lower * base_group.order
    notes.append(f"marked base has {base_group.order} automorphisms")
    if surface.genus >= 2:
        conformal = HURWITZ_FACTOR * (surface.genus - 1)
        if conformal < upper:
            notes.append(f"upper bound capped by 84(g-1) = {conformal}")
            upper = conformal
    if upper == lower:
        return CertifiedAut(lower, upper, AutStatus.EXACT, base_group, tuple(notes))
    LOGGER.warning("Translation group only bounded: %d <= |Aut| <= %d", lower, upper)
    return CertifiedAut(lower, upper, AutStatus.BOUNDED, base_group, tuple(notes))


def is_large(surface: CoveredSurface, aut: CertifiedAut, strict: bool = False) -> Tristate:
    """YES when the quotient by the full translation group is the base sphere."""

    if aut.is_exact:
        if aut.value != surface.deck_order:
            raise InternalInconsistency("exact translation count differs from the deck order")
        return Tristate.YES
    if strict:
        raise CertificationUnknown("translation group is only bounded; largeness is unknown")
    return Tristate.UNKNOWN


__all__ = ["AutStatus", "CertifiedAut", "is_large", "translation_group"]
