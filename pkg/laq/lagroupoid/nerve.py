"""
Nerve algebroids Ω^(q) of an LA-groupoid and the lifted homological fields.

Over a composable tuple (g_1, ..., g_q) the fiber of Ω^(q) is the space of
(v_1, ..., v_q) in Ω_{g_1} ⊕ ... ⊕ Ω_{g_q} with s̃(v_i) = t̃(v_{i+1}). Level 0 is
A and level 1 is Ω, both in their standard bases; higher levels use the
normalized kernel basis of the stacked constraints. Face and degeneracy maps
are first written on the direct sums ("ambient" maps) and then expressed in
these bases.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Tuple

from laq.exactla import SparseMatrix, Subspace, block_matrix, kernel, solve
from laq.groupoid import ComposableTuple, degeneracy, face, nerve
from laq.liealg import LieAlgebra, ce_derivation, is_related
from laq.shared.data_types import CheckResult, RelatednessFailure
from laq.shared.errors import IndexOutOfRange
from laq.utils.logger import StructuredLogger

from .data_types import LAGroupoid, LiftedField, NerveAlgebroid, NerveFiber

logger = StructuredLogger(__name__)


def component_dims(l: LAGroupoid, t: ComposableTuple) -> Tuple[int, ...]:
    if t.q == 0:
        return (l.side_dim(t.obj),)
    return tuple(l.top_dim(a) for a in t.components)


def _component_algebras(l: LAGroupoid, t: ComposableTuple) -> Tuple[LieAlgebra, ...]:
    if t.q == 0:
        return (l.side.fiber(t.obj),)
    return tuple(l.top.fiber(a) for a in t.components)


def constraint_matrix(l: LAGroupoid, t: ComposableTuple) -> SparseMatrix:
    """Rows s̃(v_i) − t̃(v_{i+1}) for consecutive components."""
    g, comps = l.base, t.components
    dims = component_dims(l, t)
    row_dims = [l.side_dim(g.src[a]) for a in comps[:-1]]
    blocks = {}
    for k in range(len(comps) - 1):
        blocks[(k, k)] = l.src_lin[comps[k]]
        blocks[(k, k + 1)] = -l.tgt_lin[comps[k + 1]]
    return block_matrix(row_dims, list(dims), blocks)


def compatible_basis(l: LAGroupoid, t: ComposableTuple) -> Subspace:
    """Basis of the compatible vectors over `t`, without using any bracket."""

    def compute() -> Subspace:
        if t.q <= 1:
            return Subspace.full(sum(component_dims(l, t)))
        return kernel(constraint_matrix(l, t))

    return l.cached(("compatible", t), compute)


def _split(vector, dims):
    out, offset = [], 0
    for d in dims:
        out.append(list(vector[offset: offset + d]))
        offset += d
    return out


def induced_algebra(l: LAGroupoid, t: ComposableTuple, basis: Subspace) -> LieAlgebra:
    """
    Structure constants of the componentwise bracket restricted to `basis`.

    Raises ContainmentViolation when the span of `basis` is not closed.
    """
    algebras = _component_algebras(l, t)
    if t.q <= 1:
        return algebras[0]
    dims = component_dims(l, t)
    pairs = list(combinations(range(basis.dim), 2))
    if not pairs:
        return LieAlgebra(basis.dim)
    columns = []
    for a, b in pairs:
        x, y = _split(basis.basis[a], dims), _split(basis.basis[b], dims)
        column = []
        for algebra, xa, yb in zip(algebras, x, y):
            column.extend(algebra.bracket(xa, yb))
        columns.append(column)
    coords = solve(basis, SparseMatrix.from_columns(columns, basis.ambient_dim))
    return LieAlgebra(basis.dim, {pair: tuple(coords.column(n)) for n, pair in enumerate(pairs)})


def _fiber(l: LAGroupoid, t: ComposableTuple) -> NerveFiber:
    basis = compatible_basis(l, t)
    return NerveFiber(t, component_dims(l, t), basis, induced_algebra(l, t, basis))


def nerve_algebroid(l: LAGroupoid, q: int) -> NerveAlgebroid:
    def compute() -> NerveAlgebroid:
        tuples = nerve(l.base, q)
        fibers = {t: _fiber(l, t) for t in tuples}
        logger.debug(f"nerve algebroid level {q}: fiber dims {[fibers[t].dim for t in tuples]}")
        return NerveAlgebroid(q, tuples, fibers)

    return l.cached(("nerve_algebroid", q), compute)


def ambient_face(l: LAGroupoid, t: ComposableTuple, i: int) -> SparseMatrix:
    """σ_i on direct sums: drop the first or last component, or multiply a neighbouring pair."""
    comps, q = t.components, t.q
    if q < 1 or not 0 <= i <= q:
        raise IndexOutOfRange(f"face σ_{i}^{q} is not defined.", witness={"q": q, "i": i})
    if q == 1:
        return l.src_lin[comps[0]] if i == 0 else l.tgt_lin[comps[0]]
    dims = list(component_dims(l, t))
    ident = {k: SparseMatrix.identity(d) for k, d in enumerate(dims)}
    if i == 0:
        return block_matrix(dims[1:], dims, {(k - 1, k): ident[k] for k in range(1, q)})
    if i == q:
        return block_matrix(dims[:-1], dims, {(k, k): ident[k] for k in range(q - 1)})
    p = i - 1
    merged = l.mult_lin[(comps[p], comps[p + 1])]
    row_dims = dims[:p] + [merged.rows] + dims[p + 2:]
    blocks = {(k, k): ident[k] for k in range(p)}
    blocks[(p, p)] = merged.column_slice(0, dims[p])
    blocks[(p, p + 1)] = merged.column_slice(dims[p], dims[p] + dims[p + 1])
    blocks.update({(k - 1, k): ident[k] for k in range(p + 2, q)})
    return block_matrix(row_dims, dims, blocks)


def ambient_degeneracy(l: LAGroupoid, t: ComposableTuple, i: int) -> SparseMatrix:
    """Δ_i on direct sums: insert ẽt̃(v_1) in front (i = 0) or ẽs̃(v_i) after v_i."""
    g, comps, q = l.base, t.components, t.q
    if not 0 <= i <= q:
        raise IndexOutOfRange(f"degeneracy Δ_{i}^{q} is not defined.", witness={"q": q, "i": i})
    if q == 0:
        return l.unit_lin[t.obj]
    dims = list(component_dims(l, t))
    if i == 0:
        anchor = g.tgt[comps[0]]
        inserted = l.unit_lin[anchor] @ l.tgt_lin[comps[0]]
        position, source = 0, 0
    else:
        anchor = g.src[comps[i - 1]]
        inserted = l.unit_lin[anchor] @ l.src_lin[comps[i - 1]]
        position, source = i, i - 1
    row_dims = dims[:position] + [inserted.rows] + dims[position:]
    blocks = {(position, source): inserted}
    for k, d in enumerate(dims):
        row = k if k < position else k + 1
        blocks[(row, k)] = SparseMatrix.identity(d)
    return block_matrix(row_dims, dims, blocks)


def face_matrix(l: LAGroupoid, t: ComposableTuple, i: int) -> SparseMatrix:
    """σ_i from the fiber over `t` to the fiber over σ_i(t), in the chosen bases."""
    source = compatible_basis(l, t)
    target = compatible_basis(l, face(l.base, t.q, i, t))
    return solve(target, ambient_face(l, t, i) @ source.matrix())


def degeneracy_matrix(l: LAGroupoid, t: ComposableTuple, i: int) -> SparseMatrix:
    source = compatible_basis(l, t)
    target = compatible_basis(l, degeneracy(l.base, t.q, i, t))
    return solve(target, ambient_degeneracy(l, t, i) @ source.matrix())


def nerve_face_linear(l: LAGroupoid, q: int, i: int) -> Dict[ComposableTuple, SparseMatrix]:
    """Per tuple of level q, the face map Ω^(q) -> Ω^(q−1) along σ_i."""
    if q < 1 or not 0 <= i <= q:
        raise IndexOutOfRange(f"face σ_{i}^{q} is not defined.", witness={"q": q, "i": i})
    return l.cached(("face", q, i), lambda: {t: face_matrix(l, t, i) for t in nerve(l.base, q)})


def nerve_degeneracy_linear(l: LAGroupoid, q: int, i: int) -> Dict[ComposableTuple, SparseMatrix]:
    """Per tuple of level q, the unit-insertion map Ω^(q) -> Ω^(q+1) along Δ_i."""
    if q < 0 or not 0 <= i <= q:
        raise IndexOutOfRange(f"degeneracy Δ_{i}^{q} is not defined.", witness={"q": q, "i": i})
    return l.cached(("degeneracy", q, i), lambda: {t: degeneracy_matrix(l, t, i) for t in nerve(l.base, q)})


def lifted_differential(l: LAGroupoid, q: int) -> LiftedField:
    """ψ^(q): the Chevalley-Eilenberg field of every fiber of Ω^(q)."""

    def compute() -> LiftedField:
        algebroid = nerve_algebroid(l, q)
        return LiftedField(q, {t: ce_derivation(f.algebra) for t, f in algebroid.fibers.items()})

    return l.cached(("lifted", q), compute)


def _relatedness_failure(verdict: CheckResult, **context) -> CheckResult:
    failure = verdict.failure
    where = ", ".join(f"{k}={v}" for k, v in context.items())
    return CheckResult.failed(
        RelatednessFailure(
            check="multiplicative",
            message=f"{failure.message} ({where})",
            witness={**context, **failure.witness},
        )
    )


def _check_faces(l: LAGroupoid, q: int) -> CheckResult:
    upper, lower = lifted_differential(l, q), lifted_differential(l, q - 1)
    for i in range(q + 1):
        matrices = nerve_face_linear(l, q, i)
        for t in nerve(l.base, q):
            target = face(l.base, q, i, t)
            verdict = is_related(matrices[t], upper.at(t), lower.at(target))
            if not verdict.ok:
                return _relatedness_failure(verdict, level=q, face=i, tuple=t.label())
    return CheckResult.passed()


def check_multiplicative(l: LAGroupoid) -> CheckResult:
    """
    ψ^(1) is s̃- and t̃-related to ψ^(0) = d_A, and ψ^(2) is related to ψ^(1)
    along the three level-2 faces (the two projections and m̃).
    """
    for q in (1, 2):
        verdict = _check_faces(l, q)
        if not verdict.ok:
            logger.info(f"multiplicativity fails: {verdict.failure.message}")
            return verdict
    return CheckResult.passed()


def check_simplicial_q_structure(l: LAGroupoid, q_max: int) -> CheckResult:
    """Relatedness of the lifted fields along every face and degeneracy up to level q_max."""
    for q in range(1, q_max + 1):
        verdict = _check_faces(l, q)
        if not verdict.ok:
            return verdict
    for q in range(0, q_max):
        lower, upper = lifted_differential(l, q), lifted_differential(l, q + 1)
        for i in range(q + 1):
            matrices = nerve_degeneracy_linear(l, q, i)
            for t in nerve(l.base, q):
                target = degeneracy(l.base, q, i, t)
                verdict = is_related(matrices[t], lower.at(t), upper.at(target))
                if not verdict.ok:
                    return _relatedness_failure(verdict, level=q, degeneracy=i, tuple=t.label())
    return CheckResult.passed()


__all__ = [
    "component_dims",
    "constraint_matrix",
    "compatible_basis",
    "induced_algebra",
    "nerve_algebroid",
    "ambient_face",
    "ambient_degeneracy",
    "face_matrix",
    "degeneracy_matrix",
    "nerve_face_linear",
    "nerve_degeneracy_linear",
    "lifted_differential",
    "check_multiplicative",
    "check_simplicial_q_structure",
]
