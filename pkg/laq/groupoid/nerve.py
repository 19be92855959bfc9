"""
The nerve of a finite groupoid with its face and degeneracy maps.

Level q holds the composable q-tuples, enumerated lexicographically by arrow
label; level 0 holds the objects. Faces drop the first component (i = 0),
multiply components i and i+1 (0 < i < q) or drop the last one (i = q); on
level 1 the two faces are src and tgt. Degeneracies insert a unit.
"""

from __future__ import annotations

from typing import Callable, Optional, Tuple

from laq.shared.data_types import CheckResult, IdentityFailure
from laq.shared.errors import IndexOutOfRange
from laq.utils.logger import StructuredLogger

from .data_types import ComposableTuple, FiniteGroupoid

logger = StructuredLogger(__name__)

FaceFn = Callable[[FiniteGroupoid, int, int, ComposableTuple], ComposableTuple]


def nerve(g: FiniteGroupoid, q: int) -> Tuple[ComposableTuple, ...]:
    """All composable q-tuples in lexicographic order (cached per groupoid)."""
    if q < 0:
        raise IndexOutOfRange(f"nerve level must be non-negative, got {q}.")
    cached = g.cached_level(q)
    if cached is not None:
        return cached
    if q == 0:
        tuples = tuple(ComposableTuple.of_object(x) for x in g.objects)
    elif q == 1:
        tuples = tuple(ComposableTuple((a,)) for a in g.arrows)
    else:
        tuples = tuple(
            ComposableTuple(t.components + (a,))
            for t in nerve(g, q - 1)
            for a in g.arrows
            if g.src[t.components[-1]] == g.tgt[a]
        )
    logger.debug(f"nerve level {q}: {len(tuples)} tuples")
    return g.store_level(q, tuples)


def _check_level(t: ComposableTuple, q: int) -> None:
    if t.q != q:
        raise IndexOutOfRange(f"tuple {t} has level {t.q}, expected {q}.")


def face(g: FiniteGroupoid, q: int, i: int, t: ComposableTuple) -> ComposableTuple:
    if q < 1 or not 0 <= i <= q:
        raise IndexOutOfRange(f"face σ_{i}^{q} is not defined.", witness={"q": q, "i": i})
    _check_level(t, q)
    c = t.components
    if q == 1:
        return ComposableTuple.of_object(g.src[c[0]] if i == 0 else g.tgt[c[0]])
    if i == 0:
        return ComposableTuple(c[1:])
    if i == q:
        return ComposableTuple(c[:-1])
    return ComposableTuple(c[: i - 1] + (g.compose(c[i - 1], c[i]),) + c[i + 1:])


def degeneracy(g: FiniteGroupoid, q: int, i: int, t: ComposableTuple) -> ComposableTuple:
    if q < 0 or not 0 <= i <= q:
        raise IndexOutOfRange(f"degeneracy Δ_{i}^{q} is not defined.", witness={"q": q, "i": i})
    _check_level(t, q)
    if q == 0:
        return ComposableTuple((g.unit[t.obj],))
    c = t.components
    if i == 0:
        return ComposableTuple((g.unit[g.tgt[c[0]]],) + c)
    return ComposableTuple(c[:i] + (g.unit[g.src[c[i - 1]]],) + c[i:])


def check_simplicial_identities(
    g: FiniteGroupoid,
    q_max: int,
    face_fn: Optional[FaceFn] = None,
) -> CheckResult:
    """σ_i^{q-1} σ_j^q = σ_{j-1}^{q-1} σ_i^q for all i < j <= q <= q_max, on every tuple."""
    face_fn = face_fn or face
    for q in range(2, q_max + 1):
        for t in nerve(g, q):
            for j in range(1, q + 1):
                for i in range(j):
                    try:
                        lhs = face_fn(g, q - 1, i, face_fn(g, q, j, t))
                        rhs = face_fn(g, q - 1, j - 1, face_fn(g, q, i, t))
                    except (IndexOutOfRange, KeyError) as exc:
                        return CheckResult.failed(
                            IdentityFailure(
                                check="simplicial",
                                message=f"face maps are not defined along σ_{i}σ_{j} on {t}: {exc}",
                                witness={"q": q, "i": i, "j": j, "tuple": t.label()},
                            )
                        )
                    if lhs != rhs:
                        return CheckResult.failed(
                            IdentityFailure(
                                check="simplicial",
                                message=f"σ_{i}σ_{j} differs from σ_{j - 1}σ_{i} on {t}.",
                                witness={"q": q, "i": i, "j": j, "tuple": t.label(), "lhs": lhs.label(), "rhs": rhs.label()},
                            )
                        )
    return CheckResult.passed()


def check_face_degeneracy_identities(g: FiniteGroupoid, q_max: int) -> CheckResult:
    """σ_i Δ_i = σ_{i+1} Δ_i = id on every tuple of level q < q_max."""
    for q in range(0, q_max):
        for t in nerve(g, q):
            for i in range(q + 1):
                lifted = degeneracy(g, q, i, t)
                for k in (i, i + 1):
                    back = face(g, q + 1, k, lifted)
                    if back != t:
                        return CheckResult.failed(
                            IdentityFailure(
                                check="face_degeneracy",
                                message=f"σ_{k}Δ_{i} is not the identity on {t}.",
                                witness={"q": q, "i": i, "face": k, "tuple": t.label(), "result": back.label()},
                            )
                        )
    return CheckResult.passed()


__all__ = [
    "FaceFn",
    "nerve",
    "face",
    "degeneracy",
    "check_simplicial_identities",
    "check_face_degeneracy_identities",
]
