"""
The Chevalley-Eilenberg differential of a Lie algebra.

Convention: on a dual basis vector, (dλ)(X, Y) = -λ([X, Y]), that is
dξ_k = -Σ_{i<j} c_ij^k ξ_i ξ_j, extended to the whole exterior algebra as a
degree +1 derivation.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import List, Tuple

from laq.exactla import SparseMatrix, rank
from laq.shared.data_types import CheckResult, RelatednessFailure
from laq.shared.errors import FrameMismatch, JacobiError
from laq.superalg import (
    DerivationSpec,
    Element,
    ExteriorFrame,
    apply_derivation,
    derivation_matrix,
    pullback,
)

from .data_types import LieAlgebra
from .validation import validate_lie


@lru_cache(maxsize=512)
def ce_derivation(algebra: LieAlgebra) -> DerivationSpec:
    frame = ExteriorFrame(algebra.dim)
    images: List[dict] = [{} for _ in range(algebra.dim)]
    for (i, j), vector in algebra.brackets.items():
        for k, c in enumerate(vector):
            if c:
                images[k][(i, j)] = -c
    return DerivationSpec(frame, 1, tuple(Element(frame, terms) for terms in images))


@lru_cache(maxsize=2048)
def ce_matrix(algebra: LieAlgebra, p: int) -> SparseMatrix:
    """The differential ⋀^p g* -> ⋀^{p+1} g* in lexicographic monomial bases."""
    if algebra.is_abelian():
        return SparseMatrix.zeros(comb(algebra.dim, p + 1), comb(algebra.dim, p))
    return derivation_matrix(ce_derivation(algebra), p)


def ce_cohomology_dims(algebra: LieAlgebra, p_max: int) -> Tuple[int, ...]:
    ranks = [rank(ce_matrix(algebra, p)) for p in range(p_max + 1)]
    dims = []
    for p in range(p_max + 1):
        incoming = ranks[p - 1] if p > 0 else 0
        dims.append(comb(algebra.dim, p) - ranks[p] - incoming)
    return tuple(dims)


def shifted_frame(algebra: LieAlgebra) -> Tuple[ExteriorFrame, DerivationSpec]:
    """The shifted fiber: its function algebra and the homological field encoding the bracket."""
    verdict = validate_lie(algebra)
    if not verdict.ok:
        raise JacobiError(
            f"structure constants are not a Lie algebra: {verdict.failure.message}",
            witness=verdict.failure.witness,
        )
    derivation = ce_derivation(algebra)
    return derivation.frame, derivation


def is_related(matrix: SparseMatrix, d_source: DerivationSpec, d_target: DerivationSpec) -> CheckResult:
    """
    Check μ*(d_target ξ) = d_source(μ* ξ) on every generator ξ of the target frame.

    `matrix` is the linear map μ from the source fiber (d_source.frame) to the
    target fiber (d_target.frame).
    """
    if matrix.shape != (d_target.frame.generator_count, d_source.frame.generator_count):
        raise FrameMismatch(
            f"a {matrix.rows}×{matrix.cols} map cannot relate fields over "
            f"{d_source.frame.generator_count} and {d_target.frame.generator_count} generators."
        )
    for k in range(d_target.frame.generator_count):
        xi = Element.generator(d_target.frame, k)
        lhs = pullback(matrix, d_target.images[k])
        rhs = apply_derivation(d_source, pullback(matrix, xi))
        residue = lhs - rhs
        if not residue.is_zero():
            return CheckResult.failed(
                RelatednessFailure(
                    check="related",
                    message=f"fields are not related on target generator {k}.",
                    witness={"generator": k, "residue": residue},
                )
            )
    return CheckResult.passed()


__all__ = [
    "ce_derivation",
    "ce_matrix",
    "ce_cohomology_dims",
    "shifted_frame",
    "is_related",
]
