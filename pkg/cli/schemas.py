"""Wire schemas for the JSON documents accepted on the command line.

Scalars are exact: integers, ``"p/q"``-style strings such as ``"1/2-3*i"``
or ``{"re": "1/2", "im": "-3"}``. Floats are rejected at validation time.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    StrictInt,
    StrictStr,
    ValidationError,
    field_validator,
    model_validator,
)

from cover.spec import CoverSpec
from exactnum.gaussian import GaussianRational
from exactnum.points import ProjectivePoint
from groups.catalog import psl27, small_group
from groups.group import PermGroup, generate
from groups.permutation import FreeWord, Permutation
from haupt.character import PeriodCharacter
from spherediff.differential import SphereDifferential

SCHEMA_VERSION = "1"

Scalar = Union[StrictInt, StrictStr, Dict[str, Union[StrictStr, StrictInt]]]


def _check_scalar(value: Any) -> Any:
    GaussianRational.parse(value)
    return value


class GroupDocument(BaseModel):
    """Either ``{"catalog": "S3"}`` or ``{"degree": n, "generators": [[...], ...]}``."""

    model_config = ConfigDict(extra="forbid")

    version: Optional[StrictStr] = None
    catalog: Optional[StrictStr] = None
    degree: Optional[int] = Field(default=None, ge=1)
    generators: List[List[StrictInt]] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_one_source(self) -> "GroupDocument":
        if self.catalog is None and self.degree is None:
            raise ValueError("give either a catalog name or a degree with generators")
        if self.catalog is not None and self.degree is not None:
            raise ValueError("catalog and explicit generators are mutually exclusive")
        for k, images in enumerate(self.generators):
            if self.degree is not None and sorted(images) != list(range(self.degree)):
                raise ValueError(f"generator {k + 1} is not a permutation of 0..{self.degree - 1}")
        return self

    def to_group(self) -> PermGroup:
        if self.catalog is not None:
            return psl27() if self.catalog == "PSL27" else small_group(self.catalog)
        return generate(self.degree, [tuple(g) for g in self.generators])


class FactorDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    point: Scalar
    exponent: StrictInt

    @field_validator("point")
    @classmethod
    def point_is_exact(cls, value: Any) -> Any:
        return _check_scalar(value)


class DifferentialDocument(BaseModel):
    """``leading * prod (z - point)^exponent dz``."""

    model_config = ConfigDict(extra="forbid")

    leading: Scalar = "1"
    factors: List[FactorDocument] = Field(default_factory=list)

    @field_validator("leading")
    @classmethod
    def leading_is_exact(cls, value: Any) -> Any:
        return _check_scalar(value)

    def to_differential(self) -> SphereDifferential:
        return SphereDifferential.from_json(self.model_dump())


class ImagesEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    images: List[StrictInt]


MonodromyEntry = Union[StrictInt, List[StrictInt], ImagesEntry]


class CoverDocument(BaseModel):
    """Monodromy entries are element indices (into the sorted element list),
    words in the group generators (signed, 1-based) or explicit images."""

    model_config = ConfigDict(extra="forbid")

    version: Optional[StrictStr] = None
    differential: DifferentialDocument
    marks: List[Scalar]
    group: GroupDocument
    monodromy: List[MonodromyEntry]

    @field_validator("marks")
    @classmethod
    def marks_are_exact(cls, marks: List[Any]) -> List[Any]:
        for mark in marks:
            ProjectivePoint.parse(mark)
        return marks

    def to_spec(self) -> CoverSpec:
        group = self.group.to_group()
        monodromy = [self.element_for(group, entry) for entry in self.monodromy]
        return CoverSpec(
            base=self.differential.to_differential(),
            marks=tuple(ProjectivePoint.parse(m) for m in self.marks),
            group=group,
            monodromy=tuple(monodromy),
        )

    @staticmethod
    def element_for(group: PermGroup, entry: MonodromyEntry) -> Permutation:
        if isinstance(entry, ImagesEntry):
            return Permutation(tuple(entry.images))
        if isinstance(entry, list):
            return FreeWord(tuple(entry)).evaluate(group.generators, group.degree)
        return group.element(entry)


class CharacterDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    version: Optional[StrictStr] = None
    genus: int = Field(ge=0)
    alpha: List[Scalar] = Field(default_factory=list)
    beta: List[Scalar] = Field(default_factory=list)
    peripheral: List[Scalar] = Field(default_factory=list)

    @field_validator("alpha", "beta", "peripheral")
    @classmethod
    def values_are_exact(cls, values: List[Any]) -> List[Any]:
        for value in values:
            _check_scalar(value)
        return values

    def to_character(self) -> PeriodCharacter:
        return PeriodCharacter(
            genus=self.genus,
            alpha=tuple(self.alpha),
            beta=tuple(self.beta),
            peripheral=tuple(self.peripheral),
        )


class CertificateDocument(BaseModel):
    """Only the fields verification relies on are typed; the rest pass through."""

    model_config = ConfigDict(extra="allow")

    schema_version: StrictStr
    construction: Dict[str, Any]
    genus: StrictInt
    aut: StrictStr
    bound: StrictStr
    hash: StrictStr


def error_pointer(exc: ValidationError) -> str:
    """``/``-joined location of the first validation error plus its message."""

    first = exc.errors()[0]
    pointer = "/" + "/".join(str(part) for part in first.get("loc", ()))
    return f"{pointer}: {first.get('msg', 'invalid value')}"


__all__ = [
    "CertificateDocument",
    "CharacterDocument",
    "CoverDocument",
    "DifferentialDocument",
    "GroupDocument",
    "SCHEMA_VERSION",
    "error_pointer",
]
