"""
Rank, kernel, image and subquotient computations over the rationals.

Every routine clears denominators row by row and runs sympy's fraction-free
sparse row reduction (`DomainMatrix.rref_den` over `ZZ`). Bases returned by
`kernel`, `image`, `span` and `intersect` are primitive integer vectors whose
first nonzero entry is positive, so results are reproducible across runs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, List, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from laq.shared.errors import AmbientMismatch, ContainmentViolation

from .data_types import SparseMatrix, Subspace, hstack

Reduced = Tuple[Dict[int, Dict[int, int]], Tuple[int, ...]]


def _integer_rows(m: SparseMatrix) -> List[Dict[int, int]]:
    rows = []
    for _, row in sorted(m.row_dict().items()):
        scale = reduce(lcm, (value.denominator for value in row.values()), 1)
        rows.append({j: int(value * scale) for j, value in row.items()})
    return rows


def _reduce(m: SparseMatrix) -> Reduced:
    """Reduced echelon form (integer, unnormalized pivots) and pivot columns."""
    rows = _integer_rows(m)
    if not rows:
        return {}, ()
    dod = {k: {j: ZZ(value) for j, value in row.items()} for k, row in enumerate(rows)}
    reduced, _den, pivots = DomainMatrix(dod, (len(rows), m.cols), ZZ).rref_den()
    echelon = {
        i: {j: int(value) for j, value in row.items() if value}
        for i, row in reduced.to_sparse().rep.items()
    }
    return echelon, tuple(pivots)


def primitive(vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Scale to coprime integers with a positive first nonzero entry."""
    scale = reduce(lcm, (Fraction(v).denominator for v in vector), 1)
    integers = [int(Fraction(v) * scale) for v in vector]
    common = reduce(gcd, integers, 0)
    if common == 0:
        return tuple(Fraction(0) for _ in integers)
    leading = next(value for value in integers if value)
    if leading < 0:
        common = -common
    return tuple(Fraction(value // common) for value in integers)


def rank(m: SparseMatrix) -> int:
    """Exact rank over the rationals."""
    return len(_reduce(m)[1])


def kernel(m: SparseMatrix) -> Subspace:
    """Null space of `m`; dimension is `cols - rank(m)`."""
    echelon, pivots = _reduce(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * m.cols
        vector[free] = Fraction(1)
        for i, pivot in enumerate(pivots):
            entry = echelon.get(i, {}).get(free)
            if entry:
                vector[pivot] = Fraction(-entry, echelon[i][pivot])
        basis.append(primitive(vector))
    return Subspace(m.cols, tuple(basis), _trusted=True)


def image(m: SparseMatrix) -> Subspace:
    """Column space of `m`, spanned by its pivot columns."""
    _, pivots = _reduce(m)
    columns = m.columns()
    return Subspace(m.rows, tuple(primitive(columns[j]) for j in pivots), _trusted=True)


def span(vectors: SparseMatrix) -> Subspace:
    """Normalized basis of the span of the columns of `vectors`."""
    return image(vectors)


def solve(basis: Subspace, vectors: SparseMatrix) -> SparseMatrix:
    """
    Coordinates of every column of `vectors` in `basis` (a dim × ncols matrix).

    Raises ContainmentViolation naming the first column outside the span.
    """
    if vectors.rows != basis.ambient_dim:
        raise AmbientMismatch(
            f"vectors of length {vectors.rows} against a basis in dimension {basis.ambient_dim}."
        )
    k = basis.dim
    if vectors.is_zero():
        return SparseMatrix.zeros(k, vectors.cols)
    echelon, pivots = _reduce(hstack(basis.matrix(), vectors, rows=basis.ambient_dim))
    stray = [p - k for p in pivots if p >= k]
    if stray:
        raise ContainmentViolation(
            f"column {stray[0]} does not lie in the given subspace.",
            witness={"column": stray[0]},
        )
    entries = {}
    for i in range(k):
        row = echelon.get(i, {})
        for j, value in row.items():
            if j >= k:
                entries[(i, j - k)] = Fraction(value, row[i])
    return SparseMatrix(k, vectors.cols, entries)


def contains(outer: Subspace, vectors: SparseMatrix) -> bool:
    try:
        solve(outer, vectors)
    except ContainmentViolation:
        return False
    return True


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch(
            f"subspaces of Q^{a.ambient_dim} and Q^{b.ambient_dim} cannot be combined.",
            witness={"left": a.ambient_dim, "right": b.ambient_dim},
        )


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Basis of a ∩ b (from the kernel of [A | B])."""
    _check_ambient(a, b)
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    relations = kernel(hstack(a.matrix(), b.matrix(), rows=a.ambient_dim))
    if relations.dim == 0:
        return Subspace.zero(a.ambient_dim)
    a_part = SparseMatrix.from_columns([vector[: a.dim] for vector in relations.basis], a.dim)
    return span(a.matrix() @ a_part)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return span(hstack(a.matrix(), b.matrix(), rows=a.ambient_dim))


def preimage(m: SparseMatrix, target: Subspace) -> Subspace:
    """All x with m·x in `target`."""
    if m.rows != target.ambient_dim:
        raise AmbientMismatch(
            f"a map into Q^{m.rows} cannot pull back a subspace of Q^{target.ambient_dim}."
        )
    relations = kernel(hstack(m, target.matrix(), rows=m.rows))
    if relations.dim == 0:
        return Subspace.zero(m.cols)
    x_part = SparseMatrix.from_columns([vector[: m.cols] for vector in relations.basis], m.cols)
    return span(x_part)


def subquotient_dim(outer: Subspace, inner: Subspace) -> int:
    """dim outer − dim inner, after verifying inner ⊆ outer."""
    _check_ambient(outer, inner)
    if inner.dim:
        try:
            solve(outer, inner.matrix())
        except ContainmentViolation as exc:
            raise ContainmentViolation(
                "inner subspace is not contained in the outer subspace.",
                witness={"inner_basis_index": exc.witness.get("column")},
            ) from exc
    return outer.dim - inner.dim


__all__ = [
    "primitive",
    "rank",
    "kernel",
    "image",
    "span",
    "solve",
    "contains",
    "intersect",
    "subspace_sum",
    "preimage",
    "subquotient_dim",
]
