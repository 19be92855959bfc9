"""Exterior algebras on degree +1 generators and their graded derivations."""

from .algebra import (
    apply_derivation,
    bracket,
    compose,
    derivation_matrix,
    evaluate,
    exterior_basis,
    exterior_power_transpose,
    is_homological,
    pullback,
    wedge,
    wedge_all,
)
from .data_types import DerivationSpec, Element, ExteriorFrame, Monomial, monomial_label

__all__ = [
    "DerivationSpec",
    "Element",
    "ExteriorFrame",
    "Monomial",
    "monomial_label",
    "apply_derivation",
    "bracket",
    "compose",
    "derivation_matrix",
    "evaluate",
    "exterior_basis",
    "exterior_power_transpose",
    "is_homological",
    "pullback",
    "wedge",
    "wedge_all",
]
