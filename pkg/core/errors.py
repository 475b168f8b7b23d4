"""Error hierarchy shared by every package.

Each error carries the process exit code the CLI reports for it: input
problems exit 2, refused certifications exit 3, internal cross-check
failures exit 1.
"""

from __future__ import annotations


class PolecoverError(Exception):
    """Root of all library errors."""

    exit_code: int = 1


class InputError(PolecoverError, ValueError):
    """The caller supplied data that violates a precondition."""

    exit_code = 2


class ConfigError(InputError):
    """Configuration file or environment override is unusable."""


class InvalidInput(InputError):
    """Generic malformed input (empty generator list, bad literal, ...)."""


class InvalidSpec(InputError):
    """A cover specification violates its invariants."""


class InvalidMarks(InputError):
    """Marked points are duplicated or miss a singular point."""


class InvalidCharacter(InputError):
    """A period character violates its invariants."""


class NotGenerating(InputError):
    """The given elements do not generate the group."""


class NotSymplectic(InputError):
    """A basis change matrix is not symplectic over Z."""


class NotALattice(InputError):
    """A rank-2 lattice was required."""


class NotAQuotientOrder(InputError):
    """An upstairs order does not descend through the given local degree."""


class InadmissibleSignature(InputError):
    """Riemann-Hurwitz yields a non-integral or negative genus."""


class BoundNotApplicable(InputError):
    """Cardinality bounds need genus at least two."""


class GroupTooLarge(InputError):
    """Group enumeration exceeded the configured order cap."""


class CertificationRefused(PolecoverError):
    """The data is valid but no certificate can be issued."""

    exit_code = 3


class UncertifiableBase(CertificationRefused):
    """The marked base differential has infinitely many automorphisms."""


class NonZeroResidue(CertificationRefused):
    """A pole with nonzero residue blocks the projective extension."""


class CertificationUnknown(CertificationRefused):
    """Only bounds are known, a yes/no answer was requested."""


class InternalInconsistency(PolecoverError, AssertionError):
    """Two independent computations disagree; this is a bug, not bad data."""

    exit_code = 1


__all__ = [
    "BoundNotApplicable",
    "CertificationRefused",
    "CertificationUnknown",
    "ConfigError",
    "GroupTooLarge",
    "InadmissibleSignature",
    "InputError",
    "InternalInconsistency",
    "InvalidCharacter",
    "InvalidInput",
    "InvalidMarks",
    "InvalidSpec",
    "NonZeroResidue",
    "NotALattice",
    "NotAQuotientOrder",
    "NotGenerating",
    "NotSymplectic",
    "PolecoverError",
    "UncertifiableBase",
]
