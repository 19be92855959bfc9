"""
Graded-commutative algebras on odd generators.

An `ExteriorFrame` with n generators models the functions on the degree-1
shift of an n-dimensional fiber: the exterior algebra on generators ξ_0..ξ_{n-1},
each of degree +1. Elements are finite sums of monomials (strictly increasing
index tuples) with nonzero rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from laq.exactla.data_types import RationalLike, to_rational
from laq.shared.errors import FrameMismatch

Monomial = Tuple[int, ...]


def monomial_label(monomial: Monomial) -> str:
    if not monomial:
        return "1"
    return "ξ{" + ",".join(str(i) for i in monomial) + "}"


@dataclass(frozen=True)
class ExteriorFrame:
    """Generator count of an exterior algebra; generators all have degree +1."""

    generator_count: int
    generator_degree: int = 1

    def __post_init__(self) -> None:
        if self.generator_count < 0:
            raise ValueError("generator_count must be non-negative.")
        if self.generator_degree != 1:
            raise ValueError("only degree +1 generators are supported.")

    def basis(self, p: int) -> List[Monomial]:
        if p < 0:
            return []
        return list(combinations(range(self.generator_count), p))


def _check_monomial(monomial: Monomial, frame: ExteriorFrame) -> Monomial:
    monomial = tuple(int(i) for i in monomial)
    if any(b <= a for a, b in zip(monomial, monomial[1:])):
        raise ValueError(f"monomial {monomial} is not strictly increasing.")
    if monomial and not (0 <= monomial[0] and monomial[-1] < frame.generator_count):
        raise ValueError(f"monomial {monomial} uses generators outside a frame of size {frame.generator_count}.")
    return monomial


@dataclass(frozen=True, eq=False)
class Element:
    """A finite linear combination of monomials over one frame."""

    frame: ExteriorFrame
    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in self.terms.items():
            key = _check_monomial(monomial, self.frame)
            value = to_rational(coefficient)
            if value:
                clean[key] = clean.get(key, Fraction(0)) + value
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    @classmethod
    def zero(cls, frame: ExteriorFrame) -> "Element":
        return cls(frame, {})

    @classmethod
    def one(cls, frame: ExteriorFrame) -> "Element":
        return cls(frame, {(): Fraction(1)})

    @classmethod
    def generator(cls, frame: ExteriorFrame, index: int) -> "Element":
        return cls(frame, {(index,): Fraction(1)})

    @classmethod
    def from_vector(cls, frame: ExteriorFrame, p: int, vector: Sequence[RationalLike]) -> "Element":
        basis = frame.basis(p)
        if len(vector) != len(basis):
            raise ValueError(f"expected {len(basis)} coordinates in degree {p}.")
        return cls(frame, {m: v for m, v in zip(basis, vector)})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> Optional[int]:
        """The common degree of all terms, or None for zero and inhomogeneous elements."""
        degrees = {len(m) for m in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def homogeneous(self, p: int) -> "Element":
        return Element(self.frame, {m: v for m, v in self.terms.items() if len(m) == p})

    def to_vector(self, p: int) -> List[Fraction]:
        return [self.terms.get(m, Fraction(0)) for m in self.frame.basis(p)]

    def _require_frame(self, other: "Element") -> None:
        if self.frame != other.frame:
            raise FrameMismatch(
                f"elements over frames of size {self.frame.generator_count} and "
                f"{other.frame.generator_count} cannot be combined."
            )

    def __add__(self, other: "Element") -> "Element":
        self._require_frame(other)
        merged = dict(self.terms)
        for monomial, value in other.terms.items():
            merged[monomial] = merged.get(monomial, Fraction(0)) + value
        return Element(self.frame, merged)

    def scale(self, factor: RationalLike) -> "Element":
        c = to_rational(factor)
        return Element(self.frame, {m: c * v for m, v in self.terms.items()})

    def __neg__(self) -> "Element":
        return self.scale(-1)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.frame == other.frame and dict(self.terms) == dict(other.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"{value}·{monomial_label(m)}" for m, value in sorted(self.terms.items())]
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Element({self})"


@dataclass(frozen=True, eq=False)
class DerivationSpec:
    """
    A graded derivation determined by its values on the generators.

    `images[k]` is the image of ξ_k and must be homogeneous of degree
    1 + degree (or zero).
    """

    frame: ExteriorFrame
    degree: int
    images: Tuple[Element, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        if len(images) != self.frame.generator_count:
            raise ValueError(
                f"a derivation on {self.frame.generator_count} generators needs as many images, got {len(images)}."
            )
        for k, image in enumerate(images):
            if image.frame != self.frame:
                raise FrameMismatch(f"image of generator {k} lives over another frame.")
            if not image.is_zero() and image.degree != 1 + self.degree:
                raise ValueError(
                    f"image of generator {k} must have degree {1 + self.degree}, got {image.degree}."
                )
        object.__setattr__(self, "images", images)

    @classmethod
    def zero(cls, frame: ExteriorFrame, degree: int = 1) -> "DerivationSpec":
        return cls(frame, degree, tuple(Element.zero(frame) for _ in range(frame.generator_count)))

    def is_zero(self) -> bool:
        return all(image.is_zero() for image in self.images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DerivationSpec):
            return NotImplemented
        return self.frame == other.frame and self.degree == other.degree and self.images == other.images


__all__ = [
    "Monomial",
    "monomial_label",
    "ExteriorFrame",
    "Element",
    "DerivationSpec",
]
