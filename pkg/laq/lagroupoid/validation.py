"""Validation helpers for LA-groupoids.

`validate_structure_shapes` raises ValueError on structure maps of the wrong
size or domain. `validate_la` checks the LA-groupoid axioms and returns a
verdict; each failure names the check that broke:

* ``a_source_target``: s̃ and t̃ are fiberwise surjective Lie morphisms;
* ``b_groupoid_laws``: the linear groupoid laws on fiber products;
* ``c_multiplication_morphism``: m̃ on the fiber product is a Lie morphism;
* ``d_unit_inverse_morphism``: ẽ and ĩ are Lie morphisms.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Dict, List, Tuple

from laq.exactla import SparseMatrix, rank, vstack
from laq.groupoid import validate_groupoid
from laq.liealg import LinearLieMorphism, is_lie_morphism
from laq.shared.data_types import CheckResult, LAFailure
from laq.shared.errors import ContainmentViolation
from laq.utils.logger import StructuredLogger

if TYPE_CHECKING:  # pragma: no cover
    from .data_types import LAGroupoid

logger = StructuredLogger(__name__)


def _expect_shape(name: str, key, matrix: SparseMatrix, rows: int, cols: int) -> None:
    if not isinstance(matrix, SparseMatrix):
        raise TypeError(f"{name}[{key!r}] must be a SparseMatrix.")
    if matrix.shape != (rows, cols):
        raise ValueError(
            f"{name}[{key!r}] must be {rows}×{cols}, got {matrix.rows}×{matrix.cols}."
        )


def validate_structure_shapes(l: "LAGroupoid") -> None:
    g = l.base
    if set(l.side.base) != set(g.objects):
        raise ValueError("the side bundle must live over exactly the groupoid's objects.")
    if set(l.top.base) != set(g.arrows):
        raise ValueError("the top bundle must live over exactly the groupoid's arrows.")
    for name, table in (("src_lin", l.src_lin), ("tgt_lin", l.tgt_lin), ("inv_lin", l.inv_lin)):
        if set(table) != set(g.arrows):
            raise ValueError(f"{name} must be given for every arrow.")
    if set(l.unit_lin) != set(g.objects):
        raise ValueError("unit_lin must be given for every object.")
    if set(l.mult_lin) != set(g.mult):
        raise ValueError("mult_lin must be given for exactly the composable pairs.")
    for a in g.arrows:
        dim = l.top_dim(a)
        _expect_shape("src_lin", a, l.src_lin[a], l.side_dim(g.src[a]), dim)
        _expect_shape("tgt_lin", a, l.tgt_lin[a], l.side_dim(g.tgt[a]), dim)
        _expect_shape("inv_lin", a, l.inv_lin[a], l.top_dim(g.inv[a]), dim)
    for x in g.objects:
        _expect_shape("unit_lin", x, l.unit_lin[x], l.top_dim(g.unit[x]), l.side_dim(x))
    for (a, b), ab in g.mult.items():
        _expect_shape("mult_lin", (a, b), l.mult_lin[(a, b)], l.top_dim(ab), l.top_dim(a) + l.top_dim(b))


def _fail(check: str, message: str, **witness) -> CheckResult:
    logger.info(f"LA-groupoid check {check} failed: {message}")
    return CheckResult.failed(LAFailure(check=check, message=message, witness=dict(witness)))


def _morphism_failure(check: str, what: str, result: CheckResult, **witness) -> CheckResult:
    return _fail(check, f"{what}: {result.failure.message}", **witness, **result.failure.witness)


def _check_source_target(l: "LAGroupoid") -> CheckResult:
    g = l.base
    for a in g.arrows:
        omega = l.top.fiber(a)
        for name, table, obj in (("s̃", l.src_lin, g.src[a]), ("t̃", l.tgt_lin, g.tgt[a])):
            matrix = table[a]
            if rank(matrix) != matrix.rows:
                return _fail("a_source_target", f"{name} is not surjective over {a!r}.", arrow=a, map=name)
            verdict = is_lie_morphism(LinearLieMorphism(omega, l.side.fiber(obj), matrix))
            if not verdict.ok:
                return _morphism_failure("a_source_target", f"{name} over {a!r}", verdict, arrow=a, map=name)
    return CheckResult.passed()


def _check_groupoid_laws(l: "LAGroupoid") -> CheckResult:
    from laq.groupoid import face, nerve

    from .nerve import ambient_face, compatible_basis

    g = l.base
    check = "b_groupoid_laws"
    for x in g.objects:
        u = g.unit[x]
        ident = SparseMatrix.identity(l.side_dim(x))
        if l.src_lin[u] @ l.unit_lin[x] != ident or l.tgt_lin[u] @ l.unit_lin[x] != ident:
            return _fail(check, f"s̃ẽ or t̃ẽ is not the identity at {x!r}.", object=x, law="unit")
    for a in g.arrows:
        ident = SparseMatrix.identity(l.top_dim(a))
        left, right = g.unit[g.tgt[a]], g.unit[g.src[a]]
        left_unit = l.mult_lin[(left, a)] @ vstack(l.unit_lin[g.tgt[a]] @ l.tgt_lin[a], ident)
        right_unit = l.mult_lin[(a, right)] @ vstack(ident, l.unit_lin[g.src[a]] @ l.src_lin[a])
        if left_unit != ident or right_unit != ident:
            return _fail(check, f"units do not act trivially on Ω over {a!r}.", arrow=a, law="unit")
        a_inv = g.inv[a]
        inv = l.inv_lin[a]
        if l.src_lin[a_inv] @ inv != l.tgt_lin[a] or l.tgt_lin[a_inv] @ inv != l.src_lin[a]:
            return _fail(check, f"ĩ does not swap s̃ and t̃ over {a!r}.", arrow=a, law="inverse")
        right_inverse = l.mult_lin[(a, a_inv)] @ vstack(ident, inv)
        left_inverse = l.mult_lin[(a_inv, a)] @ vstack(inv, ident)
        if right_inverse != l.unit_lin[g.tgt[a]] @ l.tgt_lin[a] or left_inverse != l.unit_lin[g.src[a]] @ l.src_lin[a]:
            return _fail(check, f"v·ĩ(v) or ĩ(v)·v is not a unit over {a!r}.", arrow=a, law="inverse")
    for t in nerve(g, 2):
        a, b = t.components
        basis = compatible_basis(l, t).matrix()
        product = ambient_face(l, t, 1) @ basis
        ab = g.compose(a, b)
        if l.src_lin[ab] @ product != l.src_lin[b] @ ambient_face(l, t, 0) @ basis:
            return _fail(check, f"s̃(v·w) differs from s̃(w) on {t}.", tuple=t.label(), law="source")
        if l.tgt_lin[ab] @ product != l.tgt_lin[a] @ ambient_face(l, t, 2) @ basis:
            return _fail(check, f"t̃(v·w) differs from t̃(v) on {t}.", tuple=t.label(), law="target")
    for t in nerve(g, 3):
        basis = compatible_basis(l, t).matrix()
        first = ambient_face(l, face(g, 3, 1, t), 1) @ ambient_face(l, t, 1) @ basis
        second = ambient_face(l, face(g, 3, 2, t), 1) @ ambient_face(l, t, 2) @ basis
        if first != second:
            return _fail(check, f"m̃ is not associative on {t}.", tuple=t.label(), law="associativity")
    return CheckResult.passed()


def _check_multiplication_morphism(l: "LAGroupoid") -> CheckResult:
    from laq.groupoid import nerve

    from .nerve import compatible_basis, face_matrix, induced_algebra

    check = "c_multiplication_morphism"
    for t in nerve(l.base, 2):
        a, b = t.components
        try:
            algebra = induced_algebra(l, t, compatible_basis(l, t))
        except ContainmentViolation:
            return _fail(check, f"the fiber product over {t} is not a subalgebra.", tuple=t.label())
        matrix = face_matrix(l, t, 1)
        verdict = is_lie_morphism(LinearLieMorphism(algebra, l.top.fiber(l.base.compose(a, b)), matrix))
        if not verdict.ok:
            return _morphism_failure(check, f"m̃ on {t}", verdict, tuple=t.label())
    return CheckResult.passed()


def _check_unit_inverse_morphism(l: "LAGroupoid") -> CheckResult:
    g = l.base
    check = "d_unit_inverse_morphism"
    for x in g.objects:
        verdict = is_lie_morphism(LinearLieMorphism(l.side.fiber(x), l.top.fiber(g.unit[x]), l.unit_lin[x]))
        if not verdict.ok:
            return _morphism_failure(check, f"ẽ at {x!r}", verdict, object=x, map="ẽ")
    for a in g.arrows:
        verdict = is_lie_morphism(LinearLieMorphism(l.top.fiber(a), l.top.fiber(g.inv[a]), l.inv_lin[a]))
        if not verdict.ok:
            return _morphism_failure(check, f"ĩ over {a!r}", verdict, arrow=a, map="ĩ")
    return CheckResult.passed()


def validate_la(l: "LAGroupoid") -> CheckResult:
    """Run the groupoid, fiber and LA-groupoid checks, stopping at the first failure."""
    verdict = validate_groupoid(l.base)
    if not verdict.ok:
        return _fail("base_groupoid", verdict.failure.message, **verdict.failure.witness)
    for name, bundle in (("side_fibers", l.side), ("top_fibers", l.top)):
        verdict = bundle.validate()
        if not verdict.ok:
            return _fail(name, verdict.failure.message, **verdict.failure.witness)
    for step in (
        _check_source_target,
        _check_groupoid_laws,
        _check_multiplication_morphism,
        _check_unit_inverse_morphism,
    ):
        verdict = step(l)
        if not verdict.ok:
            return verdict
    return CheckResult.passed()


def core_dims(l: "LAGroupoid") -> Dict[str, int]:
    """dim Ω_g − dim A_{s(g)} per arrow: the rank of the core over g."""
    return {a: l.top_dim(a) - l.side_dim(l.base.src[a]) for a in l.base.arrows}


def vacancy_check(l: "LAGroupoid") -> bool:
    """True iff every s̃ is a linear isomorphism, so Ω ≅ G ×_M A."""
    for a in l.base.arrows:
        matrix = l.src_lin[a]
        if matrix.rows != matrix.cols or rank(matrix) != matrix.rows:
            return False
    return True


__all__ = [
    "validate_structure_shapes",
    "validate_la",
    "core_dims",
    "vacancy_check",
]
