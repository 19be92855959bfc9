"""LA-groupoids over finite bases, their nerve algebroids and multiplicative homological fields."""

from .data_types import LAGroupoid, LiftedField, NerveAlgebroid, NerveFiber
from .nerve import (
    ambient_degeneracy,
    ambient_face,
    check_multiplicative,
    check_simplicial_q_structure,
    compatible_basis,
    face_matrix,
    lifted_differential,
    nerve_algebroid,
    nerve_degeneracy_linear,
    nerve_face_linear,
)
from .validation import core_dims, vacancy_check, validate_la

__all__ = [
    "LAGroupoid",
    "LiftedField",
    "NerveAlgebroid",
    "NerveFiber",
    "ambient_degeneracy",
    "ambient_face",
    "check_multiplicative",
    "check_simplicial_q_structure",
    "compatible_basis",
    "face_matrix",
    "lifted_differential",
    "nerve_algebroid",
    "nerve_degeneracy_linear",
    "nerve_face_linear",
    "core_dims",
    "vacancy_check",
    "validate_la",
]
