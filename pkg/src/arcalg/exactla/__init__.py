"""Exact linear algebra over the rationals and prime fields."""

from .field import Field
from .matrix import Matrix, Subspace, spin, subspace_intersection, subspace_sum

__all__ = [
    "Field",
    "Matrix",
    "Subspace",
    "spin",
    "subspace_intersection",
    "subspace_sum",
]
