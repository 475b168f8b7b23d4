"""Regular G-covers of marked sphere differentials."""

from .periods import PERIOD_UNIT, PeriodLattice, base_image, period_lattice
from .spec import CoverSpec
from .surface import BranchRecord, CoveredSurface, covered_surface, quotient_orders
from .translations import AutStatus, CertifiedAut, is_large, translation_group

__all__ = [
    "AutStatus",
    "BranchRecord",
    "CertifiedAut",
    "CoverSpec",
    "CoveredSurface",
    "PERIOD_UNIT",
    "PeriodLattice",
    "base_image",
    "covered_surface",
    "is_large",
    "period_lattice",
    "quotient_orders",
    "translation_group",
]
