"""
Constructors for the standard LA-groupoid families.

Vacant LA-groupoids are built from a groupoid G acting on a bundle A over its
objects: Ω_g = A_{s(g)}, s̃ = id, t̃ = the lift of g, m̃(v, w) = w, ẽ = id and
ĩ_g = the lift of g. Over a finite base the algebroid acting back on G is
forced to vanish, so no second action is taken. Equivariant squares are the
vacant squares of an action groupoid.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from laq.exactla import SparseMatrix, block_matrix
from laq.groupoid import (
    FiniteGroupoid,
    action_groupoid,
    identity_groupoid,
    pair_groupoid,
    pair_label,
    product_groupoid,
    validate_groupoid,
)
from laq.lagroupoid import LAGroupoid
from laq.liealg import LieAlgebra, LieFiberBundle
from laq.liealg.catalog import direct_sum
from laq.shared.errors import ActionInvalid, EmptySet, NotValidated
from laq.utils.logger import StructuredLogger

from .data_types import GroupActionOnBundle

logger = StructuredLogger(__name__)


def _require_groupoid(g: FiniteGroupoid) -> None:
    verdict = validate_groupoid(g)
    if not verdict.ok:
        raise NotValidated(f"groupoid fails its axioms: {verdict.failure.message}", result=verdict)


def _require_fibers(a: LieFiberBundle) -> None:
    verdict = a.validate()
    if not verdict.ok:
        raise NotValidated(f"bundle fibers are not Lie algebras: {verdict.failure.message}", result=verdict)


def _second_component(left: int, right: int) -> SparseMatrix:
    """[0 | I]: (v, w) ↦ w."""
    return block_matrix([right], [left, right], {(0, 1): SparseMatrix.identity(right)})


def vacant_from_lifts(g: FiniteGroupoid, a: LieFiberBundle, lifts: Mapping[str, SparseMatrix]) -> LAGroupoid:
    """The vacant square of G acting on A, with lifts[g]: A_{s g} -> A_{t g}."""
    top = LieFiberBundle({arrow: a.fiber(g.src[arrow]) for arrow in g.arrows})
    dims = {arrow: top.dim(arrow) for arrow in g.arrows}
    return LAGroupoid(
        base=g,
        side=a,
        top=top,
        src_lin={arrow: SparseMatrix.identity(dims[arrow]) for arrow in g.arrows},
        tgt_lin={arrow: lifts[arrow] for arrow in g.arrows},
        mult_lin={(x, y): _second_component(dims[x], dims[y]) for (x, y) in g.mult},
        unit_lin={obj: SparseMatrix.identity(a.dim(obj)) for obj in g.objects},
        inv_lin={arrow: lifts[arrow] for arrow in g.arrows},
    )


def trivial_groupoid(g: FiniteGroupoid) -> LAGroupoid:
    """Zero algebroids over G: the double complex is the groupoid cochain complex."""
    _require_groupoid(g)
    zero = LieAlgebra(0)
    empty = SparseMatrix.zeros(0, 0)
    logger.info(f"trivial_groupoid: {len(g.objects)} objects, {len(g.arrows)} arrows")
    return LAGroupoid(
        base=g,
        side=LieFiberBundle({x: zero for x in g.objects}),
        top=LieFiberBundle({arrow: zero for arrow in g.arrows}),
        src_lin={arrow: empty for arrow in g.arrows},
        tgt_lin={arrow: empty for arrow in g.arrows},
        mult_lin={pair: empty for pair in g.mult},
        unit_lin={x: empty for x in g.objects},
        inv_lin={arrow: empty for arrow in g.arrows},
    )


def trivial_algebroid(a: LieFiberBundle) -> LAGroupoid:
    """A over the identity groupoid of its base: Ω = A and every structure map is the identity."""
    _require_fibers(a)
    g = identity_groupoid(a.base)
    logger.info(f"trivial_algebroid: fiber dims {[a.dim(x) for x in a.base]}")
    return vacant_from_lifts(g, a, {g.unit[x]: SparseMatrix.identity(a.dim(x)) for x in a.base})


def vacant_matched_pair(g: FiniteGroupoid, a: LieFiberBundle, action: GroupActionOnBundle) -> LAGroupoid:
    """
    The vacant LA-groupoid of G acting on A over its objects.

    `action` must be G acting along itself (see GroupActionOnBundle.along_groupoid).
    """
    _require_groupoid(g)
    _require_fibers(a)
    action.validate()
    lifts = {}
    for arrow in g.arrows:
        key = (g.tgt[arrow], arrow)
        if action.moves.get(key) != g.src[arrow]:
            raise ActionInvalid(f"arrow {arrow!r} must move its target to its source.", witness={"arrow": arrow})
        lifts[arrow] = action.lifts[key].matrix
    logger.info(f"vacant_matched_pair: {len(g.arrows)} arrows over {len(g.objects)} objects")
    return vacant_from_lifts(g, a, lifts)


def equivariant(a: LieFiberBundle, action: GroupActionOnBundle) -> LAGroupoid:
    """
    The square of a group acting on A by Lie automorphisms: base the action
    groupoid M ⋊ Γ, arrow (x, γ) from x·γ to x, Ω_{(x,γ)} = A_{x·γ}, s̃ = id and
    t̃ = the lift A_{x·γ} -> A_x.
    """
    _require_fibers(a)
    action.validate()
    g = action_groupoid(action.group, a.base, action.moves)
    lifts = {pair_label(x, gamma): lift.matrix for (x, gamma), lift in action.lifts.items()}
    logger.info(f"equivariant: group of {len(action.group.arrows)} elements on {len(a.base)} points")
    return vacant_from_lifts(g, a, lifts)


def pair_zero(points: Sequence[str]) -> LAGroupoid:
    if not points:
        raise EmptySet("pair_zero needs at least one point.")
    return trivial_groupoid(pair_groupoid(points))


def _diag(first: SparseMatrix, second: SparseMatrix) -> SparseMatrix:
    return block_matrix([first.rows, second.rows], [first.cols, second.cols], {(0, 0): first, (1, 1): second})


def product(l1: LAGroupoid, l2: LAGroupoid) -> LAGroupoid:
    """Componentwise product of two LA-groupoids; fibers are direct sums, first factor first."""
    g = product_groupoid(l1.base, l2.base)
    side = LieFiberBundle(
        {pair_label(x, y): direct_sum(l1.side.fiber(x), l2.side.fiber(y)) for x in l1.base.objects for y in l2.base.objects}
    )
    top = LieFiberBundle(
        {pair_label(a, b): direct_sum(l1.top.fiber(a), l2.top.fiber(b)) for a in l1.base.arrows for b in l2.base.arrows}
    )
    mult_lin = {}
    for (a, c), m1 in l1.mult_lin.items():
        da, dc = l1.top_dim(a), l1.top_dim(c)
        for (b, d), m2 in l2.mult_lin.items():
            db, dd = l2.top_dim(b), l2.top_dim(d)
            mult_lin[(pair_label(a, b), pair_label(c, d))] = block_matrix(
                [m1.rows, m2.rows],
                [da, db, dc, dd],
                {
                    (0, 0): m1.column_slice(0, da),
                    (0, 2): m1.column_slice(da, da + dc),
                    (1, 1): m2.column_slice(0, db),
                    (1, 3): m2.column_slice(db, db + dd),
                },
            )
    logger.info(f"product: {len(g.objects)} objects, {len(g.arrows)} arrows")
    return LAGroupoid(
        base=g,
        side=side,
        top=top,
        src_lin={pair_label(a, b): _diag(l1.src_lin[a], l2.src_lin[b]) for a in l1.base.arrows for b in l2.base.arrows},
        tgt_lin={pair_label(a, b): _diag(l1.tgt_lin[a], l2.tgt_lin[b]) for a in l1.base.arrows for b in l2.base.arrows},
        mult_lin=mult_lin,
        unit_lin={pair_label(x, y): _diag(l1.unit_lin[x], l2.unit_lin[y]) for x in l1.base.objects for y in l2.base.objects},
        inv_lin={pair_label(a, b): _diag(l1.inv_lin[a], l2.inv_lin[b]) for a in l1.base.arrows for b in l2.base.arrows},
    )


__all__ = [
    "vacant_from_lifts",
    "trivial_groupoid",
    "trivial_algebroid",
    "vacant_matched_pair",
    "equivariant",
    "pair_zero",
    "product",
]
