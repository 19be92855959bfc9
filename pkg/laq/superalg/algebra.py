"""
Products, derivations and pullbacks on exterior algebras.

All signs come from merging sorted monomials: moving a degree-1 generator past
another one costs a factor -1, so the sign of a product is the parity of the
inversions between the two index lists.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from functools import reduce
from typing import Dict, List, Optional, Tuple

from laq.exactla.data_types import SparseMatrix
from laq.shared.data_types import CheckResult, HomologicalFailure
from laq.shared.errors import DegreeMismatch, FrameMismatch

from .data_types import DerivationSpec, Element, ExteriorFrame, Monomial


def exterior_basis(n: int, p: int) -> List[Monomial]:
    """Strictly increasing p-subsets of range(n) in lexicographic order."""
    return ExteriorFrame(n).basis(p)


def _merge(left: Monomial, right: Monomial) -> Optional[Tuple[int, Monomial]]:
    if set(left) & set(right):
        return None
    inversions = sum(len(left) - bisect_right(left, index) for index in right)
    return (-1 if inversions % 2 else 1), tuple(sorted(left + right))


def wedge(a: Element, b: Element) -> Element:
    if a.frame != b.frame:
        raise FrameMismatch(
            f"cannot multiply elements over frames of size {a.frame.generator_count} "
            f"and {b.frame.generator_count}."
        )
    product: Dict[Monomial, Fraction] = {}
    for left, x in a.terms.items():
        for right, y in b.terms.items():
            merged = _merge(left, right)
            if merged is None:
                continue
            sign, monomial = merged
            product[monomial] = product.get(monomial, Fraction(0)) + sign * x * y
    return Element(a.frame, product)


def wedge_all(frame: ExteriorFrame, factors: List[Element]) -> Element:
    return reduce(wedge, factors, Element.one(frame))


def _require_same_frame(d: DerivationSpec, x: Element) -> None:
    if d.frame != x.frame:
        raise FrameMismatch(
            f"derivation over {d.frame.generator_count} generators applied to an element over "
            f"{x.frame.generator_count}."
        )


def apply_derivation(d: DerivationSpec, x: Element) -> Element:
    """Extend the generator images of `d` to `x` by the graded Leibniz rule."""
    _require_same_frame(d, x)
    frame = d.frame
    result = Element.zero(frame)
    for monomial, coefficient in x.terms.items():
        for position, index in enumerate(monomial):
            image = d.images[index]
            if image.is_zero():
                continue
            sign = -1 if (d.degree * position) % 2 else 1
            prefix = Element(frame, {monomial[:position]: Fraction(1)})
            suffix = Element(frame, {monomial[position + 1:]: Fraction(1)})
            term = wedge(wedge(prefix, image), suffix)
            result = result + term.scale(sign * coefficient)
    return result


def compose(d1: DerivationSpec, d2: DerivationSpec, x: Element) -> Element:
    return apply_derivation(d1, apply_derivation(d2, x))


def bracket(d1: DerivationSpec, d2: DerivationSpec) -> DerivationSpec:
    """The graded commutator d1∘d2 - (-1)^{|d1||d2|} d2∘d1, given on generators."""
    if d1.frame != d2.frame:
        raise FrameMismatch("cannot bracket derivations over different frames.")
    frame = d1.frame
    sign = -1 if (d1.degree * d2.degree) % 2 else 1
    images = []
    for k in range(frame.generator_count):
        xi = Element.generator(frame, k)
        images.append(compose(d1, d2, xi) - compose(d2, d1, xi).scale(sign))
    return DerivationSpec(frame, d1.degree + d2.degree, tuple(images))


def is_homological(d: DerivationSpec) -> CheckResult:
    """d² vanishes on every generator (hence everywhere, by Leibniz)."""
    if d.degree != 1:
        raise DegreeMismatch(f"a homological field has degree +1, got {d.degree}.")
    for k in range(d.frame.generator_count):
        residue = apply_derivation(d, d.images[k])
        if not residue.is_zero():
            return CheckResult.failed(
                HomologicalFailure(
                    check="homological",
                    message=f"d² does not vanish on generator {k}.",
                    witness={"generator": k, "residue": residue},
                )
            )
    return CheckResult.passed()


def derivation_matrix(d: DerivationSpec, p: int) -> SparseMatrix:
    """Matrix of `d` from degree p to degree p + |d| in the lexicographic monomial bases."""
    frame = d.frame
    source = frame.basis(p)
    target_index = {m: r for r, m in enumerate(frame.basis(p + d.degree))}
    entries: Dict[Tuple[int, int], Fraction] = {}
    for c, monomial in enumerate(source):
        image = apply_derivation(d, Element(frame, {monomial: Fraction(1)}))
        for m, value in image.terms.items():
            entries[(target_index[m], c)] = value
    return SparseMatrix(len(target_index), len(source), entries)


def _linear_images(matrix: SparseMatrix) -> List[Element]:
    frame = ExteriorFrame(matrix.cols)
    rows = matrix.row_dict()
    return [
        Element(frame, {(j,): value for j, value in rows.get(k, {}).items()})
        for k in range(matrix.rows)
    ]


def pullback(matrix: SparseMatrix, x: Element) -> Element:
    """
    Pull `x` back along the linear map V -> W given by `matrix` (shape dim W × dim V).

    The generator ξ_k of ⋀W* maps to Σ_j matrix[k, j] η_j in ⋀V*, extended
    multiplicatively.
    """
    if x.frame.generator_count != matrix.rows:
        raise FrameMismatch(
            f"pullback along a {matrix.rows}×{matrix.cols} map needs an element over "
            f"{matrix.rows} generators, got {x.frame.generator_count}."
        )
    target = ExteriorFrame(matrix.cols)
    images = _linear_images(matrix)
    result = Element.zero(target)
    for monomial, coefficient in x.terms.items():
        result = result + wedge_all(target, [images[k] for k in monomial]).scale(coefficient)
    return result


def exterior_power_transpose(matrix: SparseMatrix, p: int) -> SparseMatrix:
    """Matrix of ⋀^p of the transpose: ⋀^p W* -> ⋀^p V*, lexicographic bases."""
    target = ExteriorFrame(matrix.cols)
    source_basis = ExteriorFrame(matrix.rows).basis(p)
    row_index = {m: r for r, m in enumerate(target.basis(p))}
    images = _linear_images(matrix)
    entries: Dict[Tuple[int, int], Fraction] = {}
    for c, monomial in enumerate(source_basis):
        image = wedge_all(target, [images[k] for k in monomial])
        for m, value in image.terms.items():
            entries[(row_index[m], c)] = value
    return SparseMatrix(len(row_index), len(source_basis), entries)


def evaluate(x: Element) -> Fraction:
    """The evaluation map: the degree-0 component of `x`."""
    return x.terms.get((), Fraction(0))


__all__ = [
    "exterior_basis",
    "wedge",
    "wedge_all",
    "apply_derivation",
    "compose",
    "bracket",
    "is_homological",
    "derivation_matrix",
    "pullback",
    "exterior_power_transpose",
    "evaluate",
]
