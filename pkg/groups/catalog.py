"""Permutation models of small groups.

Abstract constructions (cyclic, semidirect, dicyclic, products, ...) are
turned into right-regular permutation representations, so every catalog
group acts on its own elements.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Callable, Dict, Hashable, List, Tuple

from core.errors import InvalidInput
from groups.group import PermGroup, generate
from groups.permutation import Permutation

LOGGER = logging.getLogger(__name__)

Element = Hashable


@dataclass(frozen=True)
class FiniteModel:
    """Abstract finite group: element list, multiplication and generators."""

    name: str
    elements: Tuple[Element, ...]
    multiply: Callable[[Element, Element], Element]
    generators: Tuple[Element, ...]

    def regular_representation(self) -> PermGroup:
        index = {e: k for k, e in enumerate(self.elements)}
        perms = []
        for g in self.generators:
            perms.append(Permutation(tuple(index[self.multiply(e, g)] for e in self.elements)))
        group = generate(len(self.elements), perms, cap=len(self.elements))
        if group.order != len(self.elements):
            raise InvalidInput(f"{self.name}: generators do not generate the model")
        return group


def cyclic_model(n: int) -> FiniteModel:
    gens = (1 % n,) if n > 1 else (0,)
    return FiniteModel(f"C{n}", tuple(range(n)), lambda a, b: (a + b) % n, gens)


def semidirect_model(m: int, n: int, r: int, name: str | None = None) -> FiniteModel:
    """``C_m x| C_n`` where the generator of C_n acts by ``a -> r*a``."""

    if pow(r, n, m) != 1 % m:
        raise InvalidInput(f"{r}^{n} is not 1 mod {m}")

    def mul(x, y):
        (a1, b1), (a2, b2) = x, y
        return ((a1 + pow(r, b1, m) * a2) % m, (b1 + b2) % n)

    elements = tuple(cartesian(range(m), range(n)))
    return FiniteModel(name or f"C{m}:C{n}[{r}]", elements, mul, ((1, 0), (0, 1)))


def dihedral_model(m: int) -> FiniteModel:
    """Dihedral group of order 2m."""

    return semidirect_model(m, 2, m - 1, name=f"D{2 * m}")


def dicyclic_model(n: int) -> FiniteModel:
    """Dicyclic group of order 4n: x^{2n} = 1, y^2 = x^n, y x y^-1 = x^-1."""

    mod = 2 * n

    def mul(p, q):
        (a1, e1), (a2, e2) = p, q
        if e1 == 0:
            return ((a1 + a2) % mod, e2)
        if e2 == 0:
            return ((a1 - a2) % mod, 1)
        return ((a1 - a2 + n) % mod, 0)

    elements = tuple(cartesian(range(mod), (0, 1)))
    name = "Q8" if n == 2 else f"Dic{n}"
    return FiniteModel(name, elements, mul, ((1, 0), (0, 1)))


def swap_extension_model() -> FiniteModel:
    """``C2^2 x| C4`` with the generator of C4 swapping the two C2 factors."""

    def mul(p, q):
        (u1, u2, b1), (v1, v2, b2) = p, q
        if b1 % 2:
            v1, v2 = v2, v1
        return ((u1 + v1) % 2, (u2 + v2) % 2, (b1 + b2) % 4)

    elements = tuple(cartesian((0, 1), (0, 1), range(4)))
    return FiniteModel("C2^2:C4", elements, mul, ((1, 0, 0), (0, 0, 1)))


def pauli_model() -> FiniteModel:
    """Pauli group: i^k X^a Z^b with ZX = -XZ."""

    def mul(p, q):
        (k1, a1, b1), (k2, a2, b2) = p, q
        return ((k1 + k2 + 2 * b1 * a2) % 4, a1 ^ a2, b1 ^ b2)

    elements = tuple(cartesian(range(4), (0, 1), (0, 1)))
    return FiniteModel("Pauli", elements, mul, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def direct_product_model(*factors: FiniteModel) -> FiniteModel:
    identities = [_identity_of(f) for f in factors]

    def mul(p, q):
        return tuple(f.multiply(a, b) for f, a, b in zip(factors, p, q))

    gens: List[Tuple] = []
    for k, f in enumerate(factors):
        for g in f.generators:
            entry = list(identities)
            entry[k] = g
            gens.append(tuple(entry))
    elements = tuple(cartesian(*(f.elements for f in factors)))
    return FiniteModel("x".join(f.name for f in factors), elements, mul, tuple(gens))


def _identity_of(model: FiniteModel) -> Element:
    for e in model.elements:
        if all(model.multiply(e, g) == g for g in model.elements):
            return e
    raise InvalidInput(f"{model.name} has no identity")


def alternating4() -> PermGroup:
    return generate(
        4,
        [Permutation.from_cycles(4, [(0, 1, 2)]), Permutation.from_cycles(4, [(0, 1), (2, 3)])],
    )


def psl27() -> PermGroup:
    """PSL(2,7) on the projective line over F_7 (point 7 is infinity)."""

    translate = Permutation(tuple([(i + 1) % 7 for i in range(7)] + [7]))
    invert = [0] * 8
    invert[0], invert[7] = 7, 0
    for z in range(1, 7):
        invert[z] = (-pow(z, -1, 7)) % 7
    return generate(8, [translate, Permutation(tuple(invert))])


def _regular(builder: Callable[[], FiniteModel]) -> Callable[[], PermGroup]:
    return lambda: builder().regular_representation()


C = cyclic_model

SMALL_GROUPS: Dict[str, Callable[[], PermGroup]] = {
    "C1": _regular(lambda: C(1)),
    "C2": _regular(lambda: C(2)),
    "C3": _regular(lambda: C(3)),
    "C4": _regular(lambda: C(4)),
    "C2xC2": _regular(lambda: direct_product_model(C(2), C(2))),
    "C5": _regular(lambda: C(5)),
    "C6": _regular(lambda: C(6)),
    "S3": _regular(lambda: dihedral_model(3)),
    "C7": _regular(lambda: C(7)),
    "C8": _regular(lambda: C(8)),
    "C4xC2": _regular(lambda: direct_product_model(C(4), C(2))),
    "C2xC2xC2": _regular(lambda: direct_product_model(C(2), C(2), C(2))),
    "D8": _regular(lambda: dihedral_model(4)),
    "Q8": _regular(lambda: dicyclic_model(2)),
    "C9": _regular(lambda: C(9)),
    "C3xC3": _regular(lambda: direct_product_model(C(3), C(3))),
    "C10": _regular(lambda: C(10)),
    "D10": _regular(lambda: dihedral_model(5)),
    "C11": _regular(lambda: C(11)),
    "C12": _regular(lambda: C(12)),
    "C6xC2": _regular(lambda: direct_product_model(C(6), C(2))),
    "A4": alternating4,
    "D12": _regular(lambda: dihedral_model(6)),
    "Dic3": _regular(lambda: semidirect_model(3, 4, 2, name="Dic3")),
    "C13": _regular(lambda: C(13)),
    "C14": _regular(lambda: C(14)),
    "D14": _regular(lambda: dihedral_model(7)),
    "C15": _regular(lambda: C(15)),
    "C16": _regular(lambda: C(16)),
    "C4xC4": _regular(lambda: direct_product_model(C(4), C(4))),
    "C2^2:C4": _regular(swap_extension_model),
    "C4:C4": _regular(lambda: semidirect_model(4, 4, 3, name="C4:C4")),
    "C8xC2": _regular(lambda: direct_product_model(C(8), C(2))),
    "M16": _regular(lambda: semidirect_model(8, 2, 5, name="M16")),
    "D16": _regular(lambda: dihedral_model(8)),
    "SD16": _regular(lambda: semidirect_model(8, 2, 3, name="SD16")),
    "Q16": _regular(lambda: dicyclic_model(4)),
    "C4xC2xC2": _regular(lambda: direct_product_model(C(4), C(2), C(2))),
    "C2xD8": _regular(lambda: direct_product_model(C(2), dihedral_model(4))),
    "C2xQ8": _regular(lambda: direct_product_model(C(2), dicyclic_model(2))),
    "Pauli": _regular(pauli_model),
    "C2^4": _regular(lambda: direct_product_model(C(2), C(2), C(2), C(2))),
}


def small_group(name: str) -> PermGroup:
    try:
        return SMALL_GROUPS[name]()
    except KeyError as exc:
        raise InvalidInput(f"unknown catalog group {name!r}") from exc


def catalog_groups(max_order: int = 16) -> List[Tuple[str, PermGroup]]:
    out = []
    for name, build in SMALL_GROUPS.items():
        group = build()
        if group.order <= max_order:
            out.append((name, group))
    return out


def structural_signature(group: PermGroup) -> Tuple:
    """Isomorphism invariants used to tell catalog entries apart."""

    return (
        group.order,
        group.is_abelian(),
        tuple(sorted(group.order_statistics().items())),
        group.center_order(),
        group.square_count(),
    )


__all__ = [
    "FiniteModel",
    "SMALL_GROUPS",
    "alternating4",
    "catalog_groups",
    "cyclic_model",
    "dicyclic_model",
    "dihedral_model",
    "direct_product_model",
    "pauli_model",
    "psl27",
    "semidirect_model",
    "small_group",
    "structural_signature",
    "swap_extension_model",
]
