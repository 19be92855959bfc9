"""
Assembly of the double complex of an LA-groupoid, its total differential and
total cohomology.

C^{p,q} is the direct sum over composable q-tuples t of ⋀^p (Ω^(q)_t)*, in
nerve order and lexicographic monomial order within each tuple. δ is the
alternating sum of the pulled-back face maps; ψ is the Chevalley-Eilenberg
differential of every nerve fiber.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from math import comb
from typing import Callable, Dict, Iterable, List, Tuple, TypeVar

from laq.exactla import SparseMatrix, block_matrix, image, kernel, subquotient_dim
from laq.groupoid import face, nerve
from laq.lagroupoid import (
    LAGroupoid,
    check_multiplicative,
    nerve_algebroid,
    nerve_face_linear,
    validate_la,
)
from laq.liealg import ce_matrix
from laq.shared.data_types import CheckResult, IdentityViolation
from laq.shared.errors import IdentityViolationError, NotValidated, WindowTooSmall
from laq.superalg import exterior_basis, exterior_power_transpose, monomial_label
from laq.utils.config import load_settings
from laq.utils.logger import StructuredLogger

from .data_types import Block, CohomologyTable, DoubleComplex

logger = StructuredLogger(__name__)

T = TypeVar("T")


def parallel_map(fn: Callable[[Block], T], keys: Iterable[Block]) -> Dict[Block, T]:
    """Evaluate `fn` on every key, on a thread pool sized by LAQ_WORKERS; order-independent."""
    keys = list(keys)
    workers = load_settings().workers
    if workers <= 1 or len(keys) <= 1:
        return {key: fn(key) for key in keys}
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return dict(zip(keys, executor.map(fn, keys)))


def _block_labels(l: LAGroupoid, p: int, q: int) -> Tuple[str, ...]:
    algebroid = nerve_algebroid(l, q)
    return tuple(
        f"{t.label()}|{monomial_label(m)}"
        for t in algebroid.tuples
        for m in exterior_basis(algebroid.fiber(t).dim, p)
    )


def _delta_block(l: LAGroupoid, p: int, q: int) -> SparseMatrix:
    upper = nerve_algebroid(l, q)
    lower = nerve_algebroid(l, q - 1)
    lower_index = {t: k for k, t in enumerate(lower.tuples)}
    row_dims = [comb(upper.fiber(t).dim, p) for t in upper.tuples]
    col_dims = [comb(lower.fiber(t).dim, p) for t in lower.tuples]
    blocks: Dict[Tuple[int, int], SparseMatrix] = {}
    for i in range(q + 1):
        faces = nerve_face_linear(l, q, i)
        sign = -1 if i % 2 else 1
        for row, t in enumerate(upper.tuples):
            column = lower_index[face(l.base, q, i, t)]
            pulled = exterior_power_transpose(faces[t], p)
            key = (row, column)
            blocks[key] = blocks[key] + pulled.scale(sign) if key in blocks else pulled.scale(sign)
    return block_matrix(row_dims, col_dims, blocks)


def _psi_block(l: LAGroupoid, p: int, q: int) -> SparseMatrix:
    algebroid = nerve_algebroid(l, q)
    row_dims = [comb(algebroid.fiber(t).dim, p + 1) for t in algebroid.tuples]
    col_dims = [comb(algebroid.fiber(t).dim, p) for t in algebroid.tuples]
    blocks = {(k, k): ce_matrix(algebroid.fiber(t).algebra, p) for k, t in enumerate(algebroid.tuples)}
    return block_matrix(row_dims, col_dims, blocks)


def _require_valid(l: LAGroupoid) -> None:
    verdict = validate_la(l)
    if not verdict.ok:
        raise NotValidated(f"LA-groupoid failed validation: {verdict.failure.message}", result=verdict)
    verdict = check_multiplicative(l)
    if not verdict.ok:
        raise NotValidated(f"homological field is not multiplicative: {verdict.failure.message}", result=verdict)


def assemble(l: LAGroupoid, p_max: int, q_max: int, *, validate: bool = True, verify: bool = True) -> DoubleComplex:
    """
    Build C^{p,q}, δ and ψ in the window (p_max, q_max).

    Raises NotValidated when `l` fails validation or multiplicativity, and
    IdentityViolationError when the assembled matrices break a double-complex
    identity.
    """
    if p_max < 0 or q_max < 0:
        raise WindowTooSmall(f"window ({p_max}, {q_max}) must be non-negative.")
    if validate:
        _require_valid(l)
    for q in range(q_max + 1):
        nerve_algebroid(l, q)
        if q >= 1:
            for i in range(q + 1):
                nerve_face_linear(l, q, i)
    keys = [(p, q) for p in range(p_max + 1) for q in range(q_max + 1)]
    labels = {key: _block_labels(l, *key) for key in keys}
    delta = parallel_map(lambda key: _delta_block(l, *key), [k for k in keys if k[1] >= 1])
    psi = parallel_map(lambda key: _psi_block(l, *key), [k for k in keys if k[0] < p_max])
    complex_ = DoubleComplex((p_max, q_max), labels, delta, psi)
    logger.info_lines(
        f"assembled double complex in window ({p_max}, {q_max})",
        (f"C^{{{p},*}}: {[complex_.dim(p, q) for q in range(q_max + 1)]}" for p in range(p_max + 1)),
    )
    if verify:
        verdict = verify_double_complex(complex_)
        if not verdict.ok:
            raise IdentityViolationError(verdict.failure.message, witness=verdict.failure.witness)
    return complex_


def total_dims(c: DoubleComplex, n: int) -> List[int]:
    return [c.dim(p, n - p) for p in range(n + 1)]


def _require_window(c: DoubleComplex, n: int) -> None:
    if n < 0 or n + 1 > min(c.p_max, c.q_max):
        raise WindowTooSmall(
            f"total degree {n} needs a window of at least ({n + 1}, {n + 1}), have {c.window}.",
            witness={"degree": n, "window": c.window},
        )


def total_matrix(c: DoubleComplex, n: int) -> SparseMatrix:
    """D = ψ + (-1)^p δ from T^n = ⊕_p C^{p,n-p} to T^{n+1}."""
    _require_window(c, n)
    blocks: Dict[Tuple[int, int], SparseMatrix] = {}
    for p in range(n + 1):
        q = n - p
        blocks[(p + 1, p)] = c.psi[(p, q)]
        blocks[(p, p)] = c.delta[(p, q + 1)].scale(-1 if p % 2 else 1)
    return block_matrix(total_dims(c, n + 1), total_dims(c, n), blocks)


def total_cohomology(c: DoubleComplex, max_degree: int) -> CohomologyTable:
    """dim ker D / im D in total degrees 0..max_degree."""
    _require_window(c, max_degree)
    dims = []
    incoming = SparseMatrix.zeros(c.dim(0, 0), 0)
    for n in range(max_degree + 1):
        outgoing = total_matrix(c, n)
        dims.append(subquotient_dim(kernel(outgoing), image(incoming)))
        incoming = outgoing
    logger.info(f"total cohomology up to degree {max_degree}: {dims}")
    return CohomologyTable(tuple(dims), c.window)


def _violation(check: str, message: str, **witness) -> CheckResult:
    return CheckResult.failed(IdentityViolation(check=check, message=message, witness=dict(witness)))


def verify_double_complex(c: DoubleComplex) -> CheckResult:
    """δ² = 0, ψ² = 0, ψδ = δψ and D² = 0, block by block."""
    for p, q in c.blocks():
        if q >= 2 and not (c.delta[(p, q)] @ c.delta[(p, q - 1)]).is_zero():
            return _violation("delta_squared", f"δ∘δ ≠ 0 into C^{{{p},{q}}}.", block=(p, q))
        if p + 1 < c.p_max and not (c.psi[(p + 1, q)] @ c.psi[(p, q)]).is_zero():
            return _violation("psi_squared", f"ψ∘ψ ≠ 0 out of C^{{{p},{q}}}.", block=(p, q))
        if p < c.p_max and q >= 1:
            if c.psi[(p, q)] @ c.delta[(p, q)] != c.delta[(p + 1, q)] @ c.psi[(p, q - 1)]:
                return _violation("commutation", f"ψδ ≠ δψ out of C^{{{p},{q - 1}}}.", block=(p, q - 1))
    for n in range(max(min(c.p_max, c.q_max) - 1, 0)):
        if not (total_matrix(c, n + 1) @ total_matrix(c, n)).is_zero():
            return _violation("total_squared", f"D∘D ≠ 0 out of total degree {n}.", degree=n)
    return CheckResult.passed()


__all__ = [
    "parallel_map",
    "assemble",
    "total_dims",
    "total_matrix",
    "total_cohomology",
    "verify_double_complex",
]
