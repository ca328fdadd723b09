"""Exact computation of Schur multipliers, exterior squares and capability
for nilpotent Lie algebras of small dimension."""

from .linalg import QQ, Matrix, PrimeField, Subspace
from .algebra import LieAlgebra, direct_sum, validate
from . import algebra, capability, catalog, covers, homology, recognize

__all__ = [
    "QQ",
    "Matrix",
    "PrimeField",
    "Subspace",
    "LieAlgebra",
    "direct_sum",
    "validate",
    "algebra",
    "capability",
    "catalog",
    "covers",
    "homology",
    "recognize",
]

__version__ = "0.1.0"
