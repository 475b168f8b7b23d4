"""Regular G-covers of a marked sphere, described by monodromy."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from core.errors import InvalidSpec
from exactnum.points import ProjectivePoint
from groups.group import PermGroup
from groups.permutation import Permutation, product
from spherediff.differential import SphereDifferential


@dataclass(frozen=True)
class CoverSpec:
    """Base differential, ordered marks and one monodromy element per mark.

    Monodromy products read left to right: ``x_1 * x_2 * ... * x_m == id``.
    """

    base: SphereDifferential
    marks: Tuple[ProjectivePoint, ...]
    group: PermGroup
    monodromy: Tuple[Permutation, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "marks", tuple(ProjectivePoint.parse(p) for p in self.marks))
        object.__setattr__(self, "monodromy", tuple(self.monodromy))
        self.validate()

    def validate(self) -> None:
        m = len(self.marks)
        if m < 1:
            raise InvalidSpec("a cover needs at least one mark")
        if len(self.monodromy) != m:
            raise InvalidSpec(f"{m} marks but {len(self.monodromy)} monodromy elements")
        if len(set(self.marks)) != m:
            raise InvalidSpec("marks must be distinct")
        missing = [str(p) for p in self.base.singular_points() if p not in set(self.marks)]
        if missing:
            raise InvalidSpec(f"marks miss singular points of the base: {', '.join(missing)}")
        for k, x in enumerate(self.monodromy):
            if x not in self.group:
                raise InvalidSpec(f"monodromy entry {k + 1} is not in the group")
        if not product(self.monodromy, self.group.degree).is_identity:
            raise InvalidSpec("monodromy product x_1 ... x_m is not the identity")
        if not self.group.generated_by(self.monodromy):
            raise InvalidSpec("monodromy does not generate the group")

    @property
    def local_degrees(self) -> Tuple[int, ...]:
        return tuple(x.order() for x in self.monodromy)

    def to_json(self) -> dict:
        return {
            "differential": self.base.to_json(),
            "marks": [p.to_json() for p in self.marks],
            "group": self.group.to_json(),
            "monodromy": [x.to_json() for x in self.monodromy],
        }


__all__ = ["CoverSpec"]
