"""Exact rational sparse linear algebra."""

from .data_types import Rational, SparseMatrix, Subspace, block_matrix, hstack, kron, to_rational, vstack
from .elimination import (
    contains,
    image,
    intersect,
    kernel,
    preimage,
    primitive,
    rank,
    solve,
    span,
    subquotient_dim,
    subspace_sum,
)

__all__ = [
    "Rational",
    "SparseMatrix",
    "Subspace",
    "block_matrix",
    "hstack",
    "vstack",
    "kron",
    "to_rational",
    "contains",
    "image",
    "intersect",
    "kernel",
    "preimage",
    "primitive",
    "rank",
    "solve",
    "span",
    "subquotient_dim",
    "subspace_sum",
]
