"""Exact scalar, polynomial and lattice arithmetic over Q(i)."""

from .gaussian import I, ONE, ZERO, GaussianRational
from .lattice import IntegerLattice, covolume2, hnf
from .points import INFINITY, ProjectivePoint
from .ratfunc import RationalFunction

__all__ = [
    "GaussianRational",
    "I",
    "INFINITY",
    "IntegerLattice",
    "ONE",
    "ProjectivePoint",
    "RationalFunction",
    "ZERO",
    "covolume2",
    "hnf",
]
