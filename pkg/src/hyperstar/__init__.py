"""Hyper-star graphs HS(n,k), their folded variants, automorphism groups and
Cayley recognition."""

from .graphs import HyperStarGraph, build
from .groups import CapExceeded, PermGroup

__version__ = "0.1.0"
__all__ = ["HyperStarGraph", "build", "PermGroup", "CapExceeded"]
