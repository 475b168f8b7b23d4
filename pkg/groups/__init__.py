"""Finite permutation groups, free-group words and kernel lattices."""

from .catalog import SMALL_GROUPS, catalog_groups, psl27, small_group
from .group import PermGroup, generate
from .kernel import kernel_abelianization
from .permutation import FreeWord, Permutation, element_order, product
from .search import find_generating_tuple

__all__ = [
    "FreeWord",
    "PermGroup",
    "Permutation",
    "SMALL_GROUPS",
    "catalog_groups",
    "element_order",
    "find_generating_tuple",
    "generate",
    "kernel_abelianization",
    "product",
    "psl27",
    "small_group",
]
