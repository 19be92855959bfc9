"""Lie algebras over finite sets, Jacobi validation and the Chevalley-Eilenberg differential."""

from .chevalley import ce_cohomology_dims, ce_derivation, ce_matrix, is_related, shifted_frame
from .data_types import LieAlgebra, LieFiberBundle, LinearLieMorphism
from .validation import is_lie_morphism, jacobi_defect, validate_lie

__all__ = [
    "LieAlgebra",
    "LieFiberBundle",
    "LinearLieMorphism",
    "ce_cohomology_dims",
    "ce_derivation",
    "ce_matrix",
    "is_related",
    "shifted_frame",
    "is_lie_morphism",
    "jacobi_defect",
    "validate_lie",
]
