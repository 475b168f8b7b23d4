"""From finite groups to certified translation surfaces with poles."""

from .certificate import NOT_APPLICABLE, RealizationCertificate, certify_cover
from .pipeline import (
    HURWITZ_ORDERS,
    VerificationReport,
    asymmetric_base,
    pad_generators,
    realize_group,
    realize_hurwitz,
    realize_period_subgroup,
    verify_certificate,
)

__all__ = [
    "HURWITZ_ORDERS",
    "NOT_APPLICABLE",
    "RealizationCertificate",
    "VerificationReport",
    "asymmetric_base",
    "certify_cover",
    "pad_generators",
    "realize_group",
    "realize_hurwitz",
    "realize_period_subgroup",
    "verify_certificate",
]
