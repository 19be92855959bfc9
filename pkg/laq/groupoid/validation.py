"""Validation helpers for finite groupoids.

`validate_labels` and `validate_table_shape` raise ValueError/TypeError on
malformed tables. `validate_groupoid` checks the groupoid axioms exhaustively and
returns a verdict naming the first failing axiom.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Dict, Mapping, Sequence, Tuple

from laq.shared.data_types import AxiomFailure, CheckResult

if TYPE_CHECKING:  # pragma: no cover
    from .data_types import FiniteGroupoid


def validate_labels(kind: str, labels: Sequence[str]) -> None:
    for label in labels:
        if not isinstance(label, str) or not label:
            raise TypeError(f"{kind} labels must be non-empty strings, got {label!r}.")
    if len(set(labels)) != len(labels):
        raise ValueError(f"{kind} labels must be distinct.")


def validate_table_shape(
    objects: Sequence[str],
    arrows: Sequence[str],
    src: Mapping[str, str],
    tgt: Mapping[str, str],
    mult: Mapping[Tuple[str, str], str],
    unit: Mapping[str, str],
    inv: Mapping[str, str],
) -> None:
    object_set, arrow_set = set(objects), set(arrows)
    for name, table in (("src", src), ("tgt", tgt)):
        if set(table) != arrow_set:
            raise ValueError(f"{name} must be defined on exactly the declared arrows.")
        stray = [g for g, x in table.items() if x not in object_set]
        if stray:
            raise ValueError(f"{name}({stray[0]!r}) is not a declared object.")
    for (g, h), gh in mult.items():
        if g not in arrow_set or h not in arrow_set or gh not in arrow_set:
            raise ValueError(f"mult entry ({g!r}, {h!r}) -> {gh!r} uses undeclared arrows.")
    if set(unit) != object_set:
        raise ValueError("unit must be defined on exactly the declared objects.")
    if any(u not in arrow_set for u in unit.values()):
        raise ValueError("unit values must be declared arrows.")
    if set(inv) != arrow_set or any(i not in arrow_set for i in inv.values()):
        raise ValueError("inv must map the declared arrows to declared arrows.")


def _fail(axiom: str, message: str, **witness) -> CheckResult:
    return CheckResult.failed(AxiomFailure(check=axiom, message=message, witness=dict(witness)))


def validate_groupoid(g: "FiniteGroupoid") -> CheckResult:
    """Check closure, source/target of products, units, associativity and inverses."""
    products: Dict[Tuple[str, str], str] = dict(g.mult)
    for a in g.arrows:
        for b in g.arrows:
            defined = (a, b) in products
            if defined != g.composable(a, b):
                state = "missing" if not defined else "defined for a non-composable pair"
                return _fail("composability", f"product of {a!r} and {b!r} is {state}.", pair=(a, b))
    for (a, b), ab in products.items():
        if g.src[ab] != g.src[b] or g.tgt[ab] != g.tgt[a]:
            return _fail(
                "source_target",
                f"{a!r}·{b!r} = {ab!r} has the wrong source or target.",
                pair=(a, b),
                product=ab,
            )
    for x, u in g.unit.items():
        if g.src[u] != x or g.tgt[u] != x:
            return _fail("unit", f"unit of {x!r} is not a loop at {x!r}.", object=x, unit=u)
    for a in g.arrows:
        left, right = g.unit[g.tgt[a]], g.unit[g.src[a]]
        if products[(left, a)] != a or products[(a, right)] != a:
            return _fail("unit", f"units do not act trivially on {a!r}.", arrow=a)
    for (a, b), ab in products.items():
        for c in g.arrows:
            if not g.composable(b, c):
                continue
            if products[(ab, c)] != products[(a, products[(b, c)])]:
                return _fail("associativity", f"({a}·{b})·{c} differs from {a}·({b}·{c}).", triple=(a, b, c))
    for a in g.arrows:
        a_inv = g.inv[a]
        if g.src[a_inv] != g.tgt[a] or g.tgt[a_inv] != g.src[a]:
            return _fail("inverse", f"inverse of {a!r} has the wrong source or target.", arrow=a)
        if products[(a, a_inv)] != g.unit[g.tgt[a]] or products[(a_inv, a)] != g.unit[g.src[a]]:
            return _fail("inverse", f"{a!r} times its inverse is not a unit.", arrow=a, inverse=a_inv)
    return CheckResult.passed()


__all__ = ["validate_labels", "validate_table_shape", "validate_groupoid"]
