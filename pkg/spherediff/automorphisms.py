"""Automorphisms of a marked sphere differential.

With three or more marks, candidates come from sending one fixed ordered
triple of marks to every compatible ordered triple; each candidate is
verified exactly. With at most two marks the differential is moved to the
normal form ``c z^k dz`` (marks at 0 and infinity) and the finite scalar
constraint ``lambda^(k+1) = 1`` is solved.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Hashable, List, Optional, Sequence, Tuple

from core.errors import InternalInconsistency, InvalidMarks
from exactnum.gaussian import ONE, ZERO, I
from exactnum.points import ProjectivePoint
from spherediff.differential import SphereDifferential, mobius_pullback
from spherediff.mobius import MobiusMap

LOGGER = logging.getLogger(__name__)

Mark = Tuple[ProjectivePoint, Hashable]

UNITS = (ONE, -ONE, I, -I)


@dataclass(frozen=True)
class AutomorphismSet:
    """Maps defined over Q(i), plus the group order counted over C.

    ``order`` is None exactly when the group is infinite.
    """

    maps: Tuple[MobiusMap, ...]
    order: Optional[int]

    @property
    def infinite(self) -> bool:
        return self.order is None

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def to_json(self) -> dict:
        return {
            "infinite": self.infinite,
            "order": self.order,
            "maps": [m.to_json() for m in self.maps],
        }


def _validate_marks(xi: SphereDifferential, marks: Sequence[Mark]) -> None:
    points = [p for p, _ in marks]
    if len(set(points)) != len(points):
        raise InvalidMarks("marked points must be distinct")
    missing = [str(p) for p in xi.singular_points() if p not in set(points)]
    if missing:
        raise InvalidMarks(f"marks miss singular points: {', '.join(missing)}")


def marked_automorphisms(xi: SphereDifferential, marks: Sequence[Mark]) -> AutomorphismSet:
    """``{f : f^* xi = xi, f permutes the marks preserving labels}``."""

    marks = [(ProjectivePoint.parse(p), label) for p, label in marks]
    _validate_marks(xi, marks)
    if len(marks) >= 3:
        return _enumerate_by_triples(xi, marks)
    return _normal_form_automorphisms(xi, marks)


def _enumerate_by_triples(xi: SphereDifferential, marks: List[Mark]) -> AutomorphismSet:
    label_of = {p: label for p, label in marks}

    def signature(p: ProjectivePoint) -> Tuple:
        return (label_of[p], xi.order_at(p), xi.residue_at(p))

    points = [p for p, _ in marks]
    anchor = points[:3]
    anchor_sig = [signature(p) for p in anchor]
    found = {}
    candidates = 0
    for target in permutations(points, 3):
        if [signature(p) for p in target] != anchor_sig:
            continue
        candidates += 1
        f = MobiusMap.from_triples(anchor, target)
        # f sends marks to marks with equal labels
        if any(f(p) not in label_of or label_of[f(p)] != label_of[p] for p in points):
            continue
        if mobius_pullback(f, xi) != xi:
            continue
        found[f] = None
    LOGGER.debug("Triple enumeration: %d candidates, %d automorphisms", candidates, len(found))
    maps = tuple(sorted(found, key=lambda m: m.sort_key()))
    _assert_group(maps)
    return AutomorphismSet(maps=maps, order=len(maps))


def _normal_form_automorphisms(xi: SphereDifferential, marks: List[Mark]) -> AutomorphismSet:
    if len(marks) == 1:
        # a single singular point: xi is Möbius equivalent to c*dz
        return AutomorphismSet(maps=(MobiusMap.identity(),), order=None)
    (p, _), (q, _) = marks
    k = xi.order_at(p)
    if k == -1:
        # c*dz/z: every scaling fixing p and q preserves xi
        return AutomorphismSet(maps=(MobiusMap.identity(),), order=None)
    to_normal = _send_to_zero_and_infinity(p, q)
    from_normal = to_normal.inverse()
    normal = mobius_pullback(from_normal, xi)
    if normal.factors not in ((), ((ZERO, k),)) or normal.order_at_infinity != -2 - k:
        raise InternalInconsistency(f"normal form of {xi} is not c*z^{k} dz")
    maps = []
    for unit in UNITS:
        if unit ** (k + 1) != ONE:
            continue
        f = from_normal.compose_after(MobiusMap.scaling(unit)).compose_after(to_normal)
        if mobius_pullback(f, xi) != xi:
            raise InternalInconsistency(f"scaling by {unit} should preserve the normal form")
        maps.append(f)
    maps = tuple(sorted(maps, key=lambda m: m.sort_key()))
    _assert_group(maps)
    return AutomorphismSet(maps=maps, order=abs(k + 1))


def _send_to_zero_and_infinity(p: ProjectivePoint, q: ProjectivePoint) -> MobiusMap:
    """A map h with h(p) = 0 and h(q) = infinity."""

    if q.is_infinite:
        return MobiusMap.translation(-p.value)
    if p.is_infinite:
        return MobiusMap(ZERO, ONE, ONE, -q.value)
    return MobiusMap(ONE, -p.value, ONE, -q.value)


def _assert_group(maps: Sequence[MobiusMap]) -> None:
    members = set(maps)
    if MobiusMap.identity() not in members:
        raise InternalInconsistency("automorphism set misses the identity")
    for f in maps:
        if f.inverse() not in members:
            raise InternalInconsistency(f"automorphism set is not closed under inverse: {f}")
        for g in maps:
            if f.compose_after(g) not in members:
                raise InternalInconsistency("automorphism set is not closed under composition")


__all__ = ["AutomorphismSet", "marked_automorphisms"]
