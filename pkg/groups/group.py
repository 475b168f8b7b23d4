"""Finite permutation groups with fully enumerated elements."""

from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.config_loader import group_order_cap
from core.errors import GroupTooLarge, InvalidInput
from groups.permutation import Permutation

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PermGroup:
    """Closure of ``generators``; ``elements`` sorted lexicographically by images."""

    degree: int
    generators: Tuple[Permutation, ...]
    elements: Tuple[Permutation, ...]
    _index: Dict[Permutation, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {g: k for k, g in enumerate(self.elements)})

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, g: Permutation) -> bool:
        return g in self._index

    def index_of(self, g: Permutation) -> int:
        try:
            return self._index[g]
        except KeyError as exc:
            raise InvalidInput(f"{g} is not an element of the group") from exc

    def element(self, index: int) -> Permutation:
        if not 0 <= index < self.order:
            raise InvalidInput(f"element index {index} out of range 0..{self.order - 1}")
        return self.elements[index]

    def right_multiplication(self, g: Permutation) -> np.ndarray:
        """Array ``t`` with ``elements[t[k]] == elements[k] * g``."""

        table = np.asarray([e.images for e in self.elements], dtype=np.int64)
        products = np.asarray(g.images, dtype=np.int64)[table]
        return np.asarray([self._index[Permutation(tuple(row))] for row in products.tolist()], dtype=np.int64)

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a in self.generators for b in self.generators)

    def center_order(self) -> int:
        return sum(1 for z in self.elements if all(z * g == g * z for g in self.generators))

    def order_statistics(self) -> Dict[int, int]:
        return dict(sorted(Counter(e.order() for e in self.elements).items()))

    def square_count(self) -> int:
        return len({e * e for e in self.elements})

    def subgroup_order(self, gens: Sequence[Permutation], cap: Optional[int] = None) -> int:
        return generate(self.degree, gens, cap=cap or self.order).order

    def generated_by(self, gens: Sequence[Permutation]) -> bool:
        gens = [g for g in gens if not g.is_identity]
        if not gens:
            return self.order == 1
        return self.subgroup_order(gens) == self.order

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [g.to_json() for g in self.generators], "order": self.order}


def generate(degree: int, generators: Iterable[Sequence[int] | Permutation], cap: Optional[int] = None) -> PermGroup:
    """Enumerate the group generated by ``generators`` on ``degree`` points."""

    if degree < 1:
        raise InvalidInput("degree must be positive")
    gens: List[Permutation] = []
    for raw in generators:
        perm = raw if isinstance(raw, Permutation) else Permutation(tuple(raw))
        if perm.degree != degree:
            raise InvalidInput(f"generator {perm.to_json()} does not act on {degree} points")
        gens.append(perm)
    limit = group_order_cap(cap)

    identity = Permutation.identity(degree)
    seen = {identity}
    frontier = deque([identity])
    while frontier:
        current = frontier.popleft()
        for g in gens:
            nxt = current * g
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise GroupTooLarge(f"group order exceeds the cap of {limit}")
                frontier.append(nxt)
    elements = tuple(sorted(seen))
    LOGGER.debug("Generated group of order %d on %d points", len(elements), degree)
    return PermGroup(degree=degree, generators=tuple(gens), elements=elements)


__all__ = ["PermGroup", "generate"]
