"""Period characters: volume, lattice detection and realizability verdicts."""

from .character import (
    HauptResult,
    HauptVerdict,
    LatticeKind,
    LatticeStatus,
    PeriodCharacter,
    character_from_periods,
    character_from_surface,
    factors_through_sphere_cover,
    haupt_realizable,
    image_lattice,
    image_lattice_status,
    is_symplectic,
    symplectic_change,
    volume,
)

__all__ = [
    "HauptResult",
    "HauptVerdict",
    "LatticeKind",
    "LatticeStatus",
    "PeriodCharacter",
    "character_from_periods",
    "character_from_surface",
    "factors_through_sphere_cover",
    "haupt_realizable",
    "image_lattice",
    "image_lattice_status",
    "is_symplectic",
    "symplectic_change",
    "volume",
]
