"""
Invariant subcomplexes of a double complex under a linear action.

For a vacant LA-groupoid over a group Γ the fiber of Ω^(q) over a tuple is
identified with A by the last-component map P_t = s̃ ∘ pr_q. An element γ then
acts on that fiber by P_t⁻¹ ρ_γ P_t, where ρ_γ = t̃_γ s̃_γ⁻¹ is its action on A,
and on cochains by the exterior power of the transpose. Tuple by tuple this
is a cochain map only when the image of Γ is abelian, but its fixed cochains
are the forms f_t ⊗ P_t^*α with α Γ-invariant, a subcomplex for every finite
Γ. On it the total differential splits as δ ⊗ 1 + 1 ⊗ d_A over the basis
returned by `tensor_split_basis`.
"""

from __future__ import annotations

from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from laq.exactla import SparseMatrix, Subspace, block_matrix, kernel, solve, vstack
from laq.groupoid import ComposableTuple
from laq.lagroupoid import LAGroupoid, nerve_algebroid, vacancy_check
from laq.shared.errors import ActionNotCompatible, ContainmentViolation
from laq.superalg import exterior_power_transpose
from laq.utils.logger import StructuredLogger

from .data_types import Block, CochainAction, DoubleComplex

logger = StructuredLogger(__name__)


def fixed_subspace(dim: int, generators: Sequence[SparseMatrix]) -> Subspace:
    """Vectors fixed by every generator: the kernel of the stacked (A − I)."""
    ident = SparseMatrix.identity(dim)
    if not generators:
        return Subspace.full(dim)
    return kernel(vstack(*[a - ident for a in generators], cols=dim))


def _restrict(
    matrix: SparseMatrix,
    source: Subspace,
    target: Subspace,
    block: Block,
    differential: str,
) -> SparseMatrix:
    try:
        return solve(target, matrix @ source.matrix())
    except ContainmentViolation as exc:
        raise ActionNotCompatible(
            f"{differential} does not keep the fixed vectors of C^{{{block[0]},{block[1]}}} fixed.",
            witness={"block": block, "differential": differential, **exc.witness},
        ) from exc


def invariant_subcomplex(c: DoubleComplex, action: CochainAction) -> DoubleComplex:
    """
    Restrict `c` to the vectors fixed by every generator of `action`.

    The generators need not commute with δ or ψ one by one; only the fixed
    vectors have to form a subcomplex. Raises ActionNotCompatible otherwise.
    """
    generators = {block: list(action.get(block, [])) for block in c.blocks()}
    counts = {len(g) for g in generators.values()}
    if len(counts) > 1:
        raise ActionNotCompatible("every block needs the same number of generators.")
    for block, mats in generators.items():
        for k, a in enumerate(mats):
            if a.shape != (c.dim(*block), c.dim(*block)):
                raise ActionNotCompatible(f"generator {k} has the wrong size on C^{block}.", witness={"block": block})
    fixed = {block: fixed_subspace(c.dim(*block), generators[block]) for block in c.blocks()}
    embeddings = {block: space.matrix() for block, space in fixed.items()}
    delta = {
        (p, q): _restrict(matrix, fixed[(p, q - 1)], fixed[(p, q)], (p, q), "delta")
        for (p, q), matrix in c.delta.items()
    }
    psi = {
        (p, q): _restrict(matrix, fixed[(p, q)], fixed[(p + 1, q)], (p, q), "psi")
        for (p, q), matrix in c.psi.items()
    }
    labels = {block: tuple(f"inv{k}" for k in range(space.dim)) for block, space in fixed.items()}
    logger.debug(f"invariant subcomplex dims: {[[len(labels[(p, q)]) for q in range(c.q_max + 1)] for p in range(c.p_max + 1)]}")
    return DoubleComplex(c.window, labels, delta, psi, embeddings)


def _inverse(matrix: SparseMatrix) -> SparseMatrix:
    columns = Subspace(matrix.rows, tuple(tuple(col) for col in matrix.columns()))
    return solve(columns, SparseMatrix.identity(matrix.rows))


def fiber_action(l: LAGroupoid, arrow: str) -> SparseMatrix:
    """ρ_γ = t̃_γ ∘ s̃_γ⁻¹ on the fiber of A over the single object."""
    return l.tgt_lin[arrow] @ _inverse(l.src_lin[arrow])


def last_component_map(l: LAGroupoid, t: ComposableTuple) -> SparseMatrix:
    """P_t: the nerve fiber over `t` -> A, in the fiber's basis."""
    fiber = nerve_algebroid(l, t.q).fiber(t)
    if t.q == 0:
        return SparseMatrix.identity(fiber.dim)
    last = t.components[-1]
    dims = fiber.component_dims
    projection = block_matrix([dims[-1]], list(dims), {(0, len(dims) - 1): SparseMatrix.identity(dims[-1])})
    return l.src_lin[last] @ projection @ fiber.basis.matrix()


def _require_group_vacant(l: LAGroupoid) -> None:
    if not l.base.is_one_object:
        raise ActionNotCompatible("cochain actions are built for groupoids with one object.")
    if not vacancy_check(l):
        raise ActionNotCompatible("cochain actions need a vacant LA-groupoid.")


def groupoid_cochain_action(
    l: LAGroupoid,
    window: Tuple[int, int],
    generators: Optional[Sequence[str]] = None,
) -> CochainAction:
    """Per block (p, q), one matrix per group element acting on C^{p,q} tuple by tuple."""
    _require_group_vacant(l)
    generators = list(generators) if generators is not None else list(l.base.arrows)
    p_max, q_max = window
    action: Dict[Block, List[SparseMatrix]] = {}
    for q in range(q_max + 1):
        algebroid = nerve_algebroid(l, q)
        fiber_maps = {}
        for gamma in generators:
            rho = fiber_action(l, gamma)
            per_tuple = []
            for t in algebroid.tuples:
                transport = last_component_map(l, t)
                per_tuple.append(_inverse(transport) @ rho @ transport)
            fiber_maps[gamma] = per_tuple
        for p in range(p_max + 1):
            mats = []
            for gamma in generators:
                powers = [exterior_power_transpose(m, p) for m in fiber_maps[gamma]]
                dims = [m.rows for m in powers]
                mats.append(block_matrix(dims, dims, {(k, k): m for k, m in enumerate(powers)}))
            action[(p, q)] = mats
    return action


def invariant_forms(l: LAGroupoid, p: int, generators: Optional[Sequence[str]] = None) -> Subspace:
    """Forms in ⋀^p A* fixed by the group."""
    _require_group_vacant(l)
    generators = list(generators) if generators is not None else list(l.base.arrows)
    obj = l.base.objects[0]
    mats = [exterior_power_transpose(fiber_action(l, gamma), p) for gamma in generators]
    return fixed_subspace(comb(l.side_dim(obj), p), mats)


def tensor_split_basis(l: LAGroupoid, forms: Subspace, p: int, q: int) -> SparseMatrix:
    """
    Columns f_t ⊗ α_k of C^{p,q}, ordered tuple-major: the indicator of tuple t
    times the pullback of the k-th form along P_t.
    """
    algebroid = nerve_algebroid(l, q)
    columns: List[SparseMatrix] = []
    row_dims = []
    for t in algebroid.tuples:
        pulled = exterior_power_transpose(last_component_map(l, t), p) @ forms.matrix()
        columns.append(pulled)
        row_dims.append(pulled.rows)
    col_dims = [forms.dim] * len(columns)
    return block_matrix(row_dims, col_dims, {(k, k): m for k, m in enumerate(columns)})


__all__ = [
    "fixed_subspace",
    "invariant_subcomplex",
    "fiber_action",
    "last_component_map",
    "groupoid_cochain_action",
    "invariant_forms",
    "tensor_split_basis",
]
