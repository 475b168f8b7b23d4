"""Branched projective structures from second-kind translation surfaces."""

from .structure import (
    BranchPoint,
    BranchedStructureData,
    extend_to_bps,
    is_hurwitz_structure,
    projective_automorphism_count,
    troyanov_flat_check,
)

__all__ = [
    "BranchPoint",
    "BranchedStructureData",
    "extend_to_bps",
    "is_hurwitz_structure",
    "projective_automorphism_count",
    "troyanov_flat_check",
]
