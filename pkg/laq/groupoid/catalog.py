"""Standard finite groupoids: groups, pair and identity groupoids, action and product groupoids."""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Dict, Hashable, Mapping, Optional, Sequence, Tuple

from laq.shared.errors import ActionInvalid, EmptySet

from .data_types import FiniteGroupoid, pair_label

GROUP_OBJECT = "*"


def from_group_table(
    elements: Sequence[str],
    product: Callable[[str, str], str],
    identity: str,
    obj: str = GROUP_OBJECT,
) -> FiniteGroupoid:
    """One-object groupoid of a group; inverses are read off the table."""
    elements = [str(e) for e in elements]
    mult = {(a, b): str(product(a, b)) for a in elements for b in elements}
    inv: Dict[str, str] = {}
    for a in elements:
        candidates = [b for b in elements if mult[(a, b)] == identity]
        if len(candidates) != 1:
            raise ValueError(f"element {a!r} has no unique inverse in the table.")
        inv[a] = candidates[0]
    return FiniteGroupoid(
        objects=(obj,),
        arrows=tuple(elements),
        src={a: obj for a in elements},
        tgt={a: obj for a in elements},
        mult=mult,
        unit={obj: identity},
        inv=inv,
    )


def cyclic_group(n: int) -> FiniteGroupoid:
    """ℤ/n with elements labelled "0".."n-1"."""
    if n < 1:
        raise EmptySet("a cyclic group needs order at least 1.")
    labels = [str(k) for k in range(n)]
    return from_group_table(labels, lambda a, b: str((int(a) + int(b)) % n), "0")


def symmetric_group(n: int) -> FiniteGroupoid:
    """S_n on permutations of 0..n-1 written as image strings; (ab)(x) = a(b(x))."""
    if n < 1:
        raise EmptySet("a symmetric group needs at least one point.")
    labels = ["".join(str(v) for v in p) for p in permutations(range(n))]

    def product(a: str, b: str) -> str:
        return "".join(a[int(b[x])] for x in range(n))

    return from_group_table(labels, product, "".join(str(x) for x in range(n)))


def pair_groupoid(points: Sequence[str]) -> FiniteGroupoid:
    """One arrow y<-x for every ordered pair of points."""
    points = [str(p) for p in points]
    if not points:
        raise EmptySet("the pair groupoid needs at least one point.")

    def arrow(target: str, source: str) -> str:
        return f"{target}<-{source}"

    arrows = [arrow(y, x) for y in points for x in points]
    return FiniteGroupoid(
        objects=tuple(points),
        arrows=tuple(arrows),
        src={arrow(y, x): x for y in points for x in points},
        tgt={arrow(y, x): y for y in points for x in points},
        mult={
            (arrow(z, y), arrow(y, x)): arrow(z, x)
            for z in points
            for y in points
            for x in points
        },
        unit={x: arrow(x, x) for x in points},
        inv={arrow(y, x): arrow(x, y) for y in points for x in points},
    )


def identity_label(point: str) -> str:
    return f"1_{{{point}}}"


def identity_groupoid(points: Sequence[str]) -> FiniteGroupoid:
    """Only unit arrows, labelled 1_{x}."""
    points = [str(p) for p in points]
    if not points:
        raise EmptySet("the identity groupoid needs at least one point.")
    units = {x: identity_label(x) for x in points}
    return FiniteGroupoid(
        objects=tuple(points),
        arrows=tuple(units.values()),
        src={u: x for x, u in units.items()},
        tgt={u: x for x, u in units.items()},
        mult={(u, u): u for u in units.values()},
        unit=units,
        inv={u: u for u in units.values()},
    )


def action_groupoid(
    group: FiniteGroupoid,
    points: Sequence[str],
    moves: Mapping[Tuple[str, str], str],
) -> FiniteGroupoid:
    """
    Action groupoid of a right action x ↦ x·γ given by `moves[(x, γ)]`.

    `moves` is defined on (x, γ) whenever γ can act on x (for a group: always).
    The arrow (x, γ) has source x·γ and target x, and (x, γ)(x·γ, γ') = (x, γγ').
    Raises ActionInvalid when the moves are not a right action.
    """
    points = [str(p) for p in points]
    if not points:
        raise EmptySet("an action groupoid needs at least one point.")
    anchor: Dict[str, str] = {}
    for x in points:
        fixed_by = [o for o, u in group.unit.items() if moves.get((x, u)) == x]
        if len(fixed_by) != 1:
            raise ActionInvalid(f"point {x!r} is not fixed by exactly one unit.", witness={"point": x})
        anchor[x] = fixed_by[0]
    arrows: Dict[str, Tuple[str, str]] = {}
    for (x, gamma), y in moves.items():
        if x not in anchor or y not in anchor:
            raise ActionInvalid(f"move ({x!r}, {gamma!r}) -> {y!r} leaves the point set.")
        if group.tgt[gamma] != anchor[x] or group.src[gamma] != anchor[y]:
            raise ActionInvalid(
                f"{gamma!r} cannot move {x!r} to {y!r} along the anchors.",
                witness={"point": x, "arrow": gamma},
            )
        arrows[pair_label(x, gamma)] = (x, gamma)
    for x, gamma in list(arrows.values()):
        y = moves[(x, gamma)]
        for delta in group.arrows:
            if group.composable(gamma, delta) and (y, delta) in moves:
                if moves.get((x, group.compose(gamma, delta))) != moves[(y, delta)]:
                    raise ActionInvalid(
                        f"(x·{gamma})·{delta} differs from x·({gamma}{delta}) at x = {x!r}.",
                        witness={"point": x, "pair": (gamma, delta)},
                    )
    mult: Dict[Tuple[str, str], str] = {}
    for label, (x, gamma) in arrows.items():
        y = moves[(x, gamma)]
        for label2, (x2, delta) in arrows.items():
            if x2 == y:
                mult[(label, label2)] = pair_label(x, group.compose(gamma, delta))
    return FiniteGroupoid(
        objects=tuple(points),
        arrows=tuple(arrows),
        src={label: moves[(x, gamma)] for label, (x, gamma) in arrows.items()},
        tgt={label: x for label, (x, gamma) in arrows.items()},
        mult=mult,
        unit={x: pair_label(x, group.unit[anchor[x]]) for x in points},
        inv={
            label: pair_label(moves[(x, gamma)], group.inv[gamma])
            for label, (x, gamma) in arrows.items()
        },
    )


def product_groupoid(g1: FiniteGroupoid, g2: FiniteGroupoid) -> FiniteGroupoid:
    objects = [pair_label(x, y) for x in g1.objects for y in g2.objects]
    arrows = {pair_label(a, b): (a, b) for a in g1.arrows for b in g2.arrows}
    mult = {
        (pair_label(a, b), pair_label(c, d)): pair_label(g1.mult[(a, c)], g2.mult[(b, d)])
        for (a, c) in g1.mult
        for (b, d) in g2.mult
    }
    return FiniteGroupoid(
        objects=tuple(objects),
        arrows=tuple(arrows),
        src={label: pair_label(g1.src[a], g2.src[b]) for label, (a, b) in arrows.items()},
        tgt={label: pair_label(g1.tgt[a], g2.tgt[b]) for label, (a, b) in arrows.items()},
        mult=mult,
        unit={pair_label(x, y): pair_label(g1.unit[x], g2.unit[y]) for x in g1.objects for y in g2.objects},
        inv={label: pair_label(g1.inv[a], g2.inv[b]) for label, (a, b) in arrows.items()},
    )


def by_name(name: str, *, order: Optional[int] = None, points: Optional[Sequence[Hashable]] = None) -> FiniteGroupoid:
    """Catalog lookup used by model files: cyclic, symmetric, pair, identity."""
    if name == "cyclic":
        return cyclic_group(int(order or 1))
    if name == "symmetric":
        return symmetric_group(int(order or 1))
    if name == "pair":
        return pair_groupoid([str(p) for p in (points or [])])
    if name == "identity":
        return identity_groupoid([str(p) for p in (points or [])])
    raise ValueError(f"unknown groupoid catalog entry {name!r}.")


__all__ = [
    "GROUP_OBJECT",
    "from_group_table",
    "cyclic_group",
    "symmetric_group",
    "pair_groupoid",
    "identity_label",
    "identity_groupoid",
    "action_groupoid",
    "product_groupoid",
    "by_name",
]
