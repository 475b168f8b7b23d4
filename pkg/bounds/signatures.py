"""Riemann-Hurwitz arithmetic and cardinality bounds for translation groups."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import BoundNotApplicable, InadmissibleSignature, InvalidInput

LOGGER = logging.getLogger(__name__)

HURWITZ_FACTOR = 84
NOT_LARGE_FACTOR = 4


class Tristate(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def coerce(cls, value: "Tristate | bool | str | None") -> "Tristate":
        if isinstance(value, Tristate):
            return value
        if value is None:
            return cls.UNKNOWN
        if isinstance(value, bool):
            return cls.YES if value else cls.NO
        text = str(value).strip().lower()
        if text in {"true", "yes", "1"}:
            return cls.YES
        if text in {"false", "no", "0"}:
            return cls.NO
        if text == "unknown":
            return cls.UNKNOWN
        raise InvalidInput(f"expected true/false/unknown, got {value!r}")


class BoundVerdict(str, Enum):
    OK = "Ok"
    OK_EXTREMAL = "OkExtremal"
    VIOLATION = "Violation"


class Realizability(str, Enum):
    """What an arithmetic result does and does not claim."""

    ADMISSIBLE = "admissible"


@dataclass(slots=True)
class BranchSignature:
    """Degree, base genus and (s_i, d_i) branch entries with s_i * d_i = degree."""

    degree: int
    base_genus: int = 0
    entries: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise InvalidInput("degree must be at least 1")
        if self.base_genus < 0:
            raise InvalidInput("base genus must be non-negative")
        entries = tuple(sorted((int(s), int(d)) for s, d in self.entries))
        for s, d in entries:
            if s < 1 or d < 2:
                raise InvalidInput(f"branch entry ({s}, {d}) needs s >= 1 and d >= 2")
            if s * d != self.degree:
                raise InvalidInput(f"branch entry ({s}, {d}) does not multiply to {self.degree}")
        self.entries = entries

    @classmethod
    def from_local_degrees(cls, degree: int, base_genus: int, local_degrees: Sequence[int]) -> "BranchSignature":
        entries = []
        for d in local_degrees:
            if d < 1 or degree % d:
                raise InvalidInput(f"local degree {d} does not divide {degree}")
            if d > 1:
                entries.append((degree // d, d))
        return cls(degree=degree, base_genus=base_genus, entries=tuple(entries))

    @property
    def local_degrees(self) -> Tuple[int, ...]:
        return tuple(sorted(d for _, d in self.entries))

    def euler_total(self) -> int:
        """The right-hand side ``deg(2 g_Y - 2) + sum s_i (d_i - 1)``."""

        return self.degree * (2 * self.base_genus - 2) + sum(s * (d - 1) for s, d in self.entries)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "base_genus": self.base_genus,
            "entries": [{"sheets": s, "local_degree": d} for s, d in self.entries],
        }

    def __str__(self) -> str:
        return f"({self.base_genus}; {', '.join(str(d) for d in self.local_degrees)})"


def riemann_hurwitz(sig: BranchSignature) -> int:
    total = sig.euler_total()
    if total % 2 or total < -2:
        raise InadmissibleSignature(f"2g - 2 = {total} gives no valid genus for {sig}")
    return total // 2 + 1


@dataclass(slots=True)
class BoundCheck:
    verdict: BoundVerdict
    bound: int
    applied: Dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "bound": self.bound, "applied": dict(self.applied)}


def applicable_bounds(genus: int, large: Tristate, holomorphic: bool = False) -> Dict[str, int]:
    bounds = {"conformal": HURWITZ_FACTOR * (genus - 1)}
    if large is Tristate.NO or holomorphic:
        bounds["not_large"] = NOT_LARGE_FACTOR * (genus - 1)
    return bounds


def check_translation_bound(
    genus: int,
    large: "Tristate | bool | str | None",
    aut_size: int,
    holomorphic: bool = False,
) -> BoundCheck:
    """Compare ``aut_size`` with every bound that applies in this genus."""

    if genus <= 1:
        raise BoundNotApplicable(f"no cardinality bound in genus {genus}")
    if aut_size < 1:
        raise InvalidInput("aut_size must be positive")
    bounds = applicable_bounds(genus, Tristate.coerce(large), holomorphic)
    tightest = min(bounds.values())
    if aut_size > tightest:
        verdict = BoundVerdict.VIOLATION
    elif aut_size == tightest:
        verdict = BoundVerdict.OK_EXTREMAL
    else:
        verdict = BoundVerdict.OK
    return BoundCheck(verdict=verdict, bound=tightest, applied=bounds)


# admissible degrees -----------------------------------------------------

def _divisor_costs(degree: int) -> List[Tuple[int, int]]:
    """(d, deg - deg/d) for every divisor d >= 2 of the degree, cheapest first."""

    return sorted(((degree - degree // d, d) for d in range(2, degree + 1) if degree % d == 0))


def _base_genera(genus: int, degree: int, large: bool) -> List[int]:
    if large:
        return [0]
    out = []
    g_y = 1
    while degree * (2 * g_y - 2) <= 2 * genus - 2:
        out.append(g_y)
        g_y += 1
    return out


def _target(genus: int, degree: int, base_genus: int) -> int:
    return 2 * genus - 2 - degree * (2 * base_genus - 2)


def _reachable(target: int, costs: Sequence[int], max_terms: int) -> bool:
    sums = {0}
    if target == 0:
        return True
    for _ in range(max_terms):
        sums = {s + c for s in sums for c in costs if s + c <= target}
        if target in sums:
            return True
        if not sums:
            return False
    return False


def is_admissible_degree(genus: int, degree: int, large: bool) -> bool:
    max_terms = 2 * genus + 2
    costs = sorted({c for c, _ in _divisor_costs(degree)})
    for g_y in _base_genera(genus, degree, large):
        target = _target(genus, degree, g_y)
        if target < 0:
            continue
        if _reachable(target, costs, max_terms):
            return True
    return False


def admissible_signatures(genus: int, degree: int, large: bool) -> List[BranchSignature]:
    """Every signature of the given degree admitted by Riemann-Hurwitz.

    Large quotients have base genus 0, others base genus at least 1.
    """

    if genus <= 1:
        raise BoundNotApplicable(f"no cardinality bound in genus {genus}")
    max_terms = 2 * genus + 2
    costs = _divisor_costs(degree)
    found: List[BranchSignature] = []

    for g_y in _base_genera(genus, degree, large):
        target = _target(genus, degree, g_y)

        def walk(start: int, remaining: int, chosen: List[int]) -> None:
            if remaining == 0:
                found.append(BranchSignature.from_local_degrees(degree, g_y, chosen))
                return
            if len(chosen) == max_terms:
                return
            for k in range(start, len(costs)):
                cost, d = costs[k]
                if cost > remaining:
                    break
                chosen.append(d)
                walk(k, remaining - cost, chosen)
                chosen.pop()

        if target >= 0:
            walk(0, target, [])
    for sig in found:
        if riemann_hurwitz(sig) != genus:
            raise InadmissibleSignature(f"enumeration produced {sig} of the wrong genus")
    return found


@dataclass(slots=True)
class DegreeBound:
    genus: int
    large: bool
    degree: int
    witness: BranchSignature
    realizability: Realizability = Realizability.ADMISSIBLE

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "large": self.large,
            "degree": self.degree,
            "witness": self.witness.to_json(),
            "realizability": self.realizability.value,
        }


def max_admissible_degree(genus: int, large: bool, degree_cap: Optional[int] = None) -> DegreeBound:
    """Largest degree admitted by Riemann-Hurwitz, searched down from ``degree_cap``.

    The default cap is the conformal bound 84(g-1).
    """

    if genus <= 1:
        raise BoundNotApplicable(f"no cardinality bound in genus {genus}")
    cap = degree_cap if degree_cap is not None else HURWITZ_FACTOR * (genus - 1)
    for degree in range(cap, 0, -1):
        if is_admissible_degree(genus, degree, large):
            witness = admissible_signatures(genus, degree, large)[0]
            LOGGER.debug("Genus %d (large=%s): max admissible degree %d via %s", genus, large, degree, witness)
            return DegreeBound(genus=genus, large=large, degree=degree, witness=witness)
    raise InadmissibleSignature(f"no admissible degree up to {cap} in genus {genus}")


__all__ = [
    "BoundCheck",
    "BoundVerdict",
    "BranchSignature",
    "DegreeBound",
    "HURWITZ_FACTOR",
    "NOT_LARGE_FACTOR",
    "Realizability",
    "Tristate",
    "admissible_signatures",
    "applicable_bounds",
    "check_translation_bound",
    "is_admissible_degree",
    "max_admissible_degree",
    "riemann_hurwitz",
]
