"""Validation helpers for Lie algebras, fiber bundles and linear Lie morphisms.

Shape checks raise ValueError/TypeError and otherwise return None, so the
dataclass module stays focused on structure. `validate_lie` and
`is_lie_morphism` return verdicts instead of raising.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING, Any, List, Mapping, Sequence, Tuple

from laq.shared.data_types import CheckResult, JacobiFailure, MorphismFailure

if TYPE_CHECKING:  # pragma: no cover
    from .data_types import LieAlgebra, LinearLieMorphism


def validate_dim(dim: Any) -> None:
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ValueError("dim must be a non-negative integer.")


def validate_bracket_table(dim: int, brackets: Mapping[Tuple[int, int], Sequence[Fraction]]) -> None:
    for (i, j), vector in brackets.items():
        if not (0 <= i < j < dim):
            raise ValueError(f"bracket key ({i}, {j}) must satisfy 0 <= i < j < {dim}.")
        if len(vector) != dim:
            raise ValueError(f"bracket [{i}, {j}] must have {dim} coordinates, got {len(vector)}.")


def validate_fibers(fibers: Mapping[str, Any]) -> None:
    if not isinstance(fibers, Mapping):
        raise TypeError("fibers must map point labels to Lie algebras.")
    for label in fibers:
        if not isinstance(label, str):
            raise TypeError("fiber labels must be strings.")


def validate_morphism_shape(source_dim: int, target_dim: int, shape: Tuple[int, int]) -> None:
    if shape != (target_dim, source_dim):
        raise ValueError(
            f"a morphism from dimension {source_dim} to {target_dim} needs a "
            f"{target_dim}×{source_dim} matrix, got {shape[0]}×{shape[1]}."
        )


def _add(*vectors: Sequence[Fraction]) -> List[Fraction]:
    return [sum(column, Fraction(0)) for column in zip(*vectors)]


def jacobi_defect(algebra: "LieAlgebra", i: int, j: int, k: int) -> List[Fraction]:
    """[[x,y],z] + [[y,z],x] + [[z,x],y] on basis vectors x, y, z."""
    x, y, z = (algebra.basis_vector(n) for n in (i, j, k))
    return _add(
        algebra.bracket(algebra.bracket(x, y), z),
        algebra.bracket(algebra.bracket(y, z), x),
        algebra.bracket(algebra.bracket(z, x), y),
    )


def validate_lie(algebra: "LieAlgebra") -> CheckResult:
    """Check the Jacobi identity on every triple of distinct basis vectors."""
    for i, j, k in combinations(range(algebra.dim), 3):
        defect = jacobi_defect(algebra, i, j, k)
        if any(defect):
            return CheckResult.failed(
                JacobiFailure(
                    check="jacobi",
                    message=f"Jacobi identity fails on basis triple ({i}, {j}, {k}).",
                    witness={"triple": (i, j, k), "defect": defect},
                )
            )
    return CheckResult.passed()


def is_lie_morphism(morphism: "LinearLieMorphism") -> CheckResult:
    """f[x, y] = [f x, f y] on every pair of basis vectors."""
    source, target, matrix = morphism.source, morphism.target, morphism.matrix
    for i, j in combinations(range(source.dim), 2):
        lhs = matrix.apply(source.bracket_basis(i, j))
        rhs = target.bracket(matrix.column(i), matrix.column(j))
        defect = [a - b for a, b in zip(lhs, rhs)]
        if any(defect):
            return CheckResult.failed(
                MorphismFailure(
                    check="lie_morphism",
                    message=f"map does not preserve the bracket of basis pair ({i}, {j}).",
                    witness={"pair": (i, j), "defect": defect},
                )
            )
    return CheckResult.passed()


__all__ = [
    "validate_dim",
    "validate_bracket_table",
    "validate_fibers",
    "validate_morphism_shape",
    "jacobi_defect",
    "validate_lie",
    "is_lie_morphism",
]
