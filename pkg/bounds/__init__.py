"""Riemann-Hurwitz arithmetic and the 4(g-1) / 84(g-1) cardinality bounds."""

from .signatures import (
    BoundCheck,
    BoundVerdict,
    BranchSignature,
    DegreeBound,
    Realizability,
    Tristate,
    admissible_signatures,
    check_translation_bound,
    max_admissible_degree,
    riemann_hurwitz,
)

__all__ = [
    "BoundCheck",
    "BoundVerdict",
    "BranchSignature",
    "DegreeBound",
    "Realizability",
    "Tristate",
    "admissible_signatures",
    "check_translation_bound",
    "max_admissible_degree",
    "riemann_hurwitz",
]
