"""Pipelines from a finite group to a certified translation surface.

``realize_group`` places the generators over an asymmetric polynomial
differential, so the marked base has no automorphisms and the translation
group of the cover is exactly the deck group. ``realize_hurwitz`` does the
same over ``dz`` with a (2, 3, 7) generating tuple.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Any, Dict, List, Optional, Sequence, Tuple

from bounds.signatures import HURWITZ_FACTOR, BoundVerdict
from core.config_loader import BaseKind, get_config
from core.errors import InternalInconsistency, InvalidInput, NotALattice, NotGenerating
from core.serialization import canonical_hash
from cover.periods import residue_lattice
from cover.spec import CoverSpec
from exactnum.gaussian import ONE, GaussianRational
from exactnum.lattice import IntegerLattice, hnf
from exactnum.points import INFINITY, ProjectivePoint
from groups.group import PermGroup, generate
from groups.permutation import Permutation, product
from groups.search import find_generating_tuple
from realize.certificate import RealizationCertificate, certify_cover
from spherediff.differential import SphereDifferential

LOGGER = logging.getLogger(__name__)

HURWITZ_ORDERS = (2, 3, 7)


def pad_generators(generators: Sequence[Permutation], degree: int) -> List[Permutation]:
    """Drop identities, keep every remaining generator, then append them again
    cyclically until there are at least two entries and the closing element
    ``(h_1 ... h_k)^-1`` is nontrivial."""

    nontrivial = [g for g in generators if not g.is_identity]
    if not nontrivial:
        return [Permutation.identity(degree)] * 2
    padded = list(nontrivial)
    k = 0
    while len(padded) < 2 or product(padded, degree).is_identity:
        padded.append(nontrivial[k % len(nontrivial)])
        k += 1
    return padded


def asymmetric_base(k: int) -> SphereDifferential:
    """``prod_{j<k} (z - j)^(j+1) dz``: zeros of distinct orders, one pole at infinity."""

    return SphereDifferential(ONE, tuple((GaussianRational(j), j + 1) for j in range(k)))


def third_kind_base(k: int, residue: GaussianRational) -> Tuple[SphereDifferential, ProjectivePoint]:
    """Asymmetric base with an extra simple pole of the given residue at ``z = k``."""

    u = GaussianRational(k)
    value = ONE
    for j in range(k):
        value = value * (u - j) ** (j + 1)
    factors = tuple((GaussianRational(j), j + 1) for j in range(k)) + ((u, -1),)
    return SphereDifferential(residue / value, factors), ProjectivePoint.finite(u)


def _resolve_kind(kind: Optional[BaseKind | str]) -> BaseKind:
    if kind is None:
        return get_config().realize.default_kind
    try:
        return BaseKind(kind)
    except ValueError as exc:
        raise InvalidInput(f"unknown base kind {kind!r}") from exc


def realize_group(
    group: PermGroup,
    generators: Sequence[Permutation],
    kind: Optional[BaseKind | str] = None,
    residue: Optional[GaussianRational | str] = None,
) -> RealizationCertificate:
    generators = list(generators)
    if not generators:
        raise InvalidInput("at least one generator is required")
    for g in generators:
        if g not in group:
            raise InvalidInput(f"generator {g} is not in the group")
    if not group.generated_by(generators):
        raise NotGenerating("the generators do not generate the group")

    base_kind = _resolve_kind(kind)
    padded = pad_generators(generators, group.degree)
    k = len(padded)
    closing = product(padded, group.degree).inverse()
    marks = [ProjectivePoint.finite(j) for j in range(k)]
    inputs: Dict[str, Any] = {"kind": base_kind.value, "generators": [g.to_json() for g in generators]}

    if base_kind is BaseKind.THIRD:
        r = GaussianRational.parse(residue if residue is not None else get_config().realize.default_residue)
        if r.is_zero:
            raise InvalidInput("a third-kind base needs a nonzero residue")
        xi, extra = third_kind_base(k, r)
        marks.append(extra)
        monodromy = padded + [group.identity, closing]
        inputs["residue"] = r.to_json()
    else:
        xi = asymmetric_base(k)
        monodromy = padded + [closing]
    marks.append(INFINITY)

    LOGGER.info("Realizing a group of order %d with %d marks over %s", group.order, len(marks), xi)
    spec = CoverSpec(base=xi, marks=tuple(marks), group=group, monodromy=tuple(monodromy))
    certificate = certify_cover(spec, pipeline="group", inputs=inputs)
    if not certificate.aut.is_exact or certificate.aut.value != group.order:
        raise InternalInconsistency(
            f"expected exact certification of order {group.order}, got {certificate.aut.to_json()}"
        )
    return certificate


def realize_hurwitz(group: PermGroup) -> Optional[RealizationCertificate]:
    """Cover of ``dz`` branched over 0, 1, infinity with degrees 2, 3, 7, or None."""

    found = find_generating_tuple(group, HURWITZ_ORDERS)
    if found is None:
        LOGGER.info("No (2,3,7) generating tuple in a group of order %d", group.order)
        return None
    marks = (ProjectivePoint.finite(0), ProjectivePoint.finite(1), INFINITY)
    spec = CoverSpec(base=SphereDifferential.dz(), marks=marks, group=group, monodromy=found)
    certificate = certify_cover(spec, pipeline="hurwitz", inputs={"orders": list(HURWITZ_ORDERS)})
    expected = HURWITZ_FACTOR * (certificate.genus - 1)
    if not certificate.aut.is_exact or certificate.aut.value != expected:
        raise InternalInconsistency(f"Hurwitz cover certified {certificate.aut.to_json()}, expected {expected}")
    if certificate.bound is None or certificate.bound.verdict is not BoundVerdict.OK_EXTREMAL:
        raise InternalInconsistency("Hurwitz cover does not attain the conformal bound")
    return certificate


# abelian covers ------------------------------------------------------------

def _coset_action(
    coordinates: Sequence[Sequence[int]], sublattice: Sequence[Sequence[int]], rank: int
) -> Tuple[List[Permutation], int]:
    """Translations by ``coordinates`` on ``Z^rank / sublattice`` as permutations."""

    rows = hnf(sublattice, dim=rank).basis
    diagonal = [rows[i][i] for i in range(rank)]

    def reduce_vector(v: Sequence[int]) -> Tuple[int, ...]:
        v = list(v)
        for i, row in enumerate(rows):
            q = v[i] // row[i]
            v = [a - q * b for a, b in zip(v, row)]
        return tuple(v)

    reps = list(cartesian(*(range(d) for d in diagonal)))
    index = {rep: k for k, rep in enumerate(reps)}
    perms = []
    for c in coordinates:
        images = tuple(index[reduce_vector([a + b for a, b in zip(rep, c)])] for rep in reps)
        perms.append(Permutation(images))
    return perms, len(reps)


def realize_period_subgroup(
    xi: SphereDifferential,
    marks: Sequence[ProjectivePoint | str],
    sublattice: IntegerLattice,
) -> RealizationCertificate:
    """Abelian cover whose period lattice is ``2*pi*i * sublattice``.

    ``sublattice`` must have finite index in the Z-span of the residues at
    the marks; the deck group is the quotient, acting on its cosets.
    """

    points = [ProjectivePoint.parse(p) for p in marks]
    residues = [xi.residue_at(p) for p in points]
    ambient = residue_lattice(residues)
    if ambient.is_zero:
        raise InvalidInput("the residue lattice is zero; use a third-kind differential")
    if not ambient.contains_lattice(sublattice):
        raise InvalidInput("the requested lattice is not inside the residue lattice")
    if sublattice.rank != ambient.rank:
        raise NotALattice("the requested lattice has infinite index in the residue lattice")

    rank = ambient.rank
    coords = [ambient.coordinates([r.re, r.im]) for r in residues]
    sub_coords = [ambient.coordinates(row) for row in sublattice.rational_basis()]
    perms, degree = _coset_action(coords, sub_coords, rank)
    group = generate(degree, perms, cap=degree)
    if group.order != degree:
        raise InternalInconsistency("coset translations do not act regularly")

    spec = CoverSpec(base=xi, marks=tuple(points), group=group, monodromy=tuple(perms))
    certificate = certify_cover(spec, pipeline="period_subgroup", inputs={"sublattice": sublattice.to_json()})
    periods = certificate.periods.lattice
    certificate.surface.checks.require(
        "period_lattice_matches_request",
        periods.contains_lattice(sublattice) and sublattice.contains_lattice(periods),
        f"index {degree} subgroup realized",
    )
    return certificate


# verification --------------------------------------------------------------

@dataclass(slots=True)
class VerificationReport:
    agreements: Dict[str, bool] = field(default_factory=dict)
    recomputed: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.agreements.values())

    def to_json(self) -> dict:
        return {"ok": self.ok, "agreements": dict(self.agreements)}


def rebuild_spec(construction: Dict[str, Any]) -> CoverSpec:
    try:
        group_data = construction["group"]
        degree = int(group_data["degree"])
        group = generate(degree, [tuple(g) for g in group_data["generators"]])
        xi = SphereDifferential.from_json(construction["differential"])
        marks = tuple(ProjectivePoint.parse(p) for p in construction["marks"])
        monodromy = tuple(Permutation(tuple(x)) for x in construction["monodromy"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"certificate construction block is incomplete: {exc}") from exc
    return CoverSpec(base=xi, marks=marks, group=group, monodromy=monodromy)


VERIFIED_FIELDS = ("genus", "kind", "aut", "bound", "surface", "period_lattice", "projective", "is_large")


def verify_certificate(payload: Dict[str, Any]) -> VerificationReport:
    """Rebuild the cover from the construction block and compare every verdict."""

    report = VerificationReport()
    stored_hash = payload.get("hash")
    body = {k: v for k, v in payload.items() if k != "hash"}
    report.agreements["hash"] = stored_hash == canonical_hash(body)

    construction = payload.get("construction")
    if not isinstance(construction, dict):
        raise InvalidInput("certificate has no construction block")
    spec = rebuild_spec(construction)
    inputs = {k: v for k, v in construction.items() if k not in {"pipeline", "group", "differential", "marks", "monodromy"}}
    rebuilt = certify_cover(spec, pipeline=str(construction.get("pipeline", "group")), inputs=inputs).to_dict()
    report.recomputed = rebuilt
    for name in VERIFIED_FIELDS:
        report.agreements[name] = payload.get(name) == rebuilt.get(name)
    report.agreements["checks"] = all(c.get("status") == "passed" for c in rebuilt.get("checks", []))
    LOGGER.info("Certificate verification %s", "passed" if report.ok else "FAILED")
    return report


__all__ = [
    "HURWITZ_ORDERS",
    "VerificationReport",
    "asymmetric_base",
    "pad_generators",
    "rebuild_spec",
    "realize_group",
    "realize_hurwitz",
    "realize_period_subgroup",
    "third_kind_base",
    "verify_certificate",
]
