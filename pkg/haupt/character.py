"""Period characters and their realizability verdicts.

Characters are stored on a symplectic basis ``(alpha_1..alpha_g,
beta_1..beta_g)`` plus one peripheral value per puncture. All values are
Gaussian rationals, so the generated subgroup of C is always discrete of
rank at most two.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

from core.errors import InternalInconsistency, InvalidCharacter, NotSymplectic
from cover.periods import period_lattice
from cover.surface import CoveredSurface
from exactnum.gaussian import ZERO, GaussianRational
from exactnum.lattice import IntegerLattice
from spherediff.differential import DifferentialKind

LOGGER = logging.getLogger(__name__)

Values = Tuple[GaussianRational, ...]


@dataclass(frozen=True)
class PeriodCharacter:
    genus: int
    alpha: Values = ()
    beta: Values = ()
    peripheral: Values = ()

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise InvalidCharacter("genus must be non-negative")
        alpha = tuple(GaussianRational.parse(v) for v in self.alpha)
        beta = tuple(GaussianRational.parse(v) for v in self.beta)
        peripheral = tuple(GaussianRational.parse(v) for v in self.peripheral)
        if len(alpha) != self.genus or len(beta) != self.genus:
            raise InvalidCharacter(f"genus {self.genus} needs {self.genus} alpha and beta values")
        total = ZERO
        for v in peripheral:
            total = total + v
        if not total.is_zero:
            raise InvalidCharacter(f"peripheral values must sum to zero, got {total}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "peripheral", peripheral)

    @property
    def punctures(self) -> int:
        return len(self.peripheral)

    def values(self) -> List[GaussianRational]:
        return list(self.alpha) + list(self.beta) + list(self.peripheral)

    @property
    def is_trivial(self) -> bool:
        return all(v.is_zero for v in self.values())

    def direct_sum(self, other: "PeriodCharacter") -> "PeriodCharacter":
        """Genus-wise concatenation of two characters."""

        return PeriodCharacter(
            genus=self.genus + other.genus,
            alpha=self.alpha + other.alpha,
            beta=self.beta + other.beta,
            peripheral=self.peripheral + other.peripheral,
        )

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "alpha": [v.to_json() for v in self.alpha],
            "beta": [v.to_json() for v in self.beta],
            "peripheral": [v.to_json() for v in self.peripheral],
        }


def volume(chi: PeriodCharacter) -> Fraction:
    """``sum Im(conj(chi(alpha_i)) * chi(beta_i))``."""

    return sum(((a.conjugate() * b).im for a, b in zip(chi.alpha, chi.beta)), Fraction(0))


def standard_symplectic_form(genus: int) -> sympy.Matrix:
    identity = sympy.eye(genus)
    zero = sympy.zeros(genus)
    return sympy.Matrix(sympy.BlockMatrix([[zero, identity], [-identity, zero]]))


def is_symplectic(matrix: Sequence[Sequence[int]], genus: int) -> bool:
    m = sympy.Matrix(matrix)
    if m.shape != (2 * genus, 2 * genus):
        return False
    if any(not entry.is_integer for entry in m):
        return False
    j = standard_symplectic_form(genus)
    return m.T * j * m == j


def symplectic_change(chi: PeriodCharacter, matrix: Sequence[Sequence[int]]) -> PeriodCharacter:
    """Values on the new basis ``e'_i = sum_j M_ij e_j``; peripheral values unchanged."""

    g = chi.genus
    if g == 0:
        if len(matrix) != 0:
            raise NotSymplectic("genus 0 only admits the empty matrix")
        return chi
    if not is_symplectic(matrix, g):
        raise NotSymplectic("matrix does not satisfy M^T J M = J over Z")
    old = list(chi.alpha) + list(chi.beta)
    new = []
    for row in matrix:
        acc = ZERO
        for coeff, value in zip(row, old):
            acc = acc + value * int(coeff)
        new.append(acc)
    return PeriodCharacter(genus=g, alpha=tuple(new[:g]), beta=tuple(new[g:]), peripheral=chi.peripheral)


class LatticeKind(str, Enum):
    RANK0 = "Rank0"
    RANK1 = "Rank1"
    LATTICE = "Lattice"


@dataclass(frozen=True)
class LatticeStatus:
    kind: LatticeKind
    covolume: Optional[Fraction] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind.value}
        if self.covolume is not None:
            out["covolume"] = self.covolume
        return out


def image_lattice(chi: PeriodCharacter) -> IntegerLattice:
    return IntegerLattice.from_rational_rows([[v.re, v.im] for v in chi.values()], 2)


def image_lattice_status(chi: PeriodCharacter) -> LatticeStatus:
    lattice = image_lattice(chi)
    if lattice.rank == 0:
        return LatticeStatus(LatticeKind.RANK0)
    if lattice.rank == 1:
        return LatticeStatus(LatticeKind.RANK1)
    return LatticeStatus(LatticeKind.LATTICE, lattice.covolume2())


class HauptVerdict(str, Enum):
    REALIZABLE_FIRST_KIND = "RealizableFirstKind"
    FAILS_VOLUME = "FailsVolume"
    FAILS_LATTICE_CONDITION = "FailsLatticeCondition"
    REALIZABLE_WITH_POLES = "RealizableWithPoles"


@dataclass(frozen=True)
class HauptResult:
    verdict: HauptVerdict
    volume: Fraction
    lattice: LatticeStatus
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "volume": self.volume,
            "lattice": self.lattice.to_json(),
            "notes": list(self.notes),
        }


def haupt_realizable(
    chi: PeriodCharacter,
    requested_kind: Optional[DifferentialKind] = None,
) -> HauptResult:
    """Realizability verdict: holomorphic case for closed surfaces, with poles otherwise."""

    vol = volume(chi)
    status = image_lattice_status(chi)
    notes: List[str] = []
    if chi.punctures >= 1:
        verdict = HauptVerdict.REALIZABLE_WITH_POLES
        if requested_kind is DifferentialKind.SECOND and any(not v.is_zero for v in chi.peripheral):
            notes.append(
                "second kind requested but peripheral values are nonzero; "
                "a second-kind differential has zero residues, so only the third kind applies"
            )
    elif vol <= 0:
        verdict = HauptVerdict.FAILS_VOLUME
    elif status.kind is LatticeKind.LATTICE and vol < 2 * status.covolume:
        verdict = HauptVerdict.FAILS_LATTICE_CONDITION
    else:
        verdict = HauptVerdict.REALIZABLE_FIRST_KIND
    LOGGER.debug("Haupt verdict %s (volume %s)", verdict.value, vol)
    return HauptResult(verdict=verdict, volume=vol, lattice=status, notes=tuple(notes))


def factors_through_sphere_cover(chi: PeriodCharacter) -> bool:
    """False for nontrivial characters whose peripheral values all vanish.

    A cover of a sphere differential has its period image inside the span of
    the base residues, so a nontrivial image needs nonzero residues upstairs.
    """

    if chi.is_trivial:
        return True
    return any(not v.is_zero for v in chi.peripheral)


def character_from_periods(generators: Sequence[GaussianRational], peripheral: Sequence[GaussianRational]) -> PeriodCharacter:
    """Wrap a period lattice (at most two generators) as a genus-one character."""

    gens = list(generators) + [ZERO] * (2 - len(generators))
    if len(gens) > 2:
        raise InvalidCharacter("a period lattice has at most two generators")
    return PeriodCharacter(genus=1, alpha=(gens[0],), beta=(gens[1],), peripheral=tuple(peripheral))


def character_from_surface(surface: CoveredSurface) -> PeriodCharacter:
    """Character of a cover in units of 2*pi*i: lattice generators on the
    symplectic slots, puncture residues on the peripheral loops."""

    periods = period_lattice(surface)
    g = surface.genus
    slots = list(periods.generators())[: 2 * g]
    slots += [ZERO] * (2 * g - len(slots))
    chi = PeriodCharacter(
        genus=g,
        alpha=tuple(slots[:g]),
        beta=tuple(slots[g:]),
        peripheral=tuple(surface.puncture_residues()),
    )
    image = image_lattice(chi)
    if not (image.contains_lattice(periods.lattice) and periods.lattice.contains_lattice(image)):
        raise InternalInconsistency("character image differs from the period lattice")
    return chi


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
