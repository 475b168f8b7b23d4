"""Meromorphic differentials on the Riemann sphere and their symmetries."""

from .automorphisms import AutomorphismSet, marked_automorphisms
from .differential import (
    DifferentialKind,
    SphereDifferential,
    kind_of,
    mobius_pullback,
    order_at,
    residue_at,
)
from .mobius import MobiusMap

__all__ = [
    "AutomorphismSet",
    "DifferentialKind",
    "MobiusMap",
    "SphereDifferential",
    "kind_of",
    "marked_automorphisms",
    "mobius_pullback",
    "order_at",
    "residue_at",
]
