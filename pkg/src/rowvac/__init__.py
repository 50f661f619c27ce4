"""Rowmotion and rowvacuation on root posets, with the nonnesting-to-noncrossing bijection."""

from .bijection import theta_A, theta_D_partial, theta_uniform
from .poset import RankedPoset, rowmotion, rowvacuation, toggle
from .roots import RootPoset, build, catalan, narayana
from .verify import VerificationReport
from .weyl import NoncrossingLattice, WeylElement, WeylGroup

__all__ = [
    "NoncrossingLattice",
    "RankedPoset",
    "RootPoset",
    "VerificationReport",
    "WeylElement",
    "WeylGroup",
    "build",
    "catalan",
    "narayana",
    "rowmotion",
    "rowvacuation",
    "theta_A",
    "theta_D_partial",
    "theta_uniform",
    "toggle",
]
