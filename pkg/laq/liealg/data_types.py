"""
Lie algebras over the rationals and bundles of them over finite sets.

Over a finite base every vector field vanishes, so the anchor of a Lie
algebroid is zero and the Leibniz rule makes its bracket fiberwise: a Lie
algebroid over a finite set is exactly a bundle of Lie algebras. The anchor is
therefore not stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from laq.exactla.data_types import RationalLike, SparseMatrix, to_rational
from laq.shared.data_types import CheckResult

from .validation import (
    validate_bracket_table,
    validate_dim,
    validate_fibers,
    validate_lie,
    validate_morphism_shape,
)

Bracket = Tuple[int, int, int, RationalLike]


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """
    Structure constants of a finite-dimensional Lie algebra on basis e_0..e_{dim-1}.

    `brackets[(i, j)]` for i < j holds the coordinates of [e_i, e_j]; brackets
    of pairs not listed are zero. Antisymmetry is structural. The Jacobi
    identity is not enforced here; see `validate_lie`.
    """

    dim: int
    brackets: Mapping[Tuple[int, int], Tuple[Fraction, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        validate_dim(self.dim)
        table = {
            (int(i), int(j)): tuple(to_rational(c) for c in vector)
            for (i, j), vector in self.brackets.items()
        }
        validate_bracket_table(self.dim, table)
        object.__setattr__(self, "brackets", {key: v for key, v in sorted(table.items()) if any(v)})

    @classmethod
    def from_brackets(cls, dim: int, entries: Iterable[Bracket]) -> "LieAlgebra":
        """Build from (i, j, k, c) meaning: the e_k coordinate of [e_i, e_j] is c."""
        table: Dict[Tuple[int, int], List[Fraction]] = {}
        for i, j, k, c in entries:
            value = to_rational(c)
            if i == j:
                if value:
                    raise ValueError(f"[e_{i}, e_{i}] must vanish.")
                continue
            if not (0 <= k < dim):
                raise ValueError(f"bracket coordinate {k} outside dimension {dim}.")
            key, sign = ((i, j), 1) if i < j else ((j, i), -1)
            vector = table.setdefault(key, [Fraction(0)] * dim)
            vector[k] += sign * value
        return cls(dim, {key: tuple(v) for key, v in table.items()})

    def is_abelian(self) -> bool:
        return not self.brackets

    def basis_vector(self, index: int) -> List[Fraction]:
        vector = [Fraction(0)] * self.dim
        vector[index] = Fraction(1)
        return vector

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i > j:
            return -self.structure_constant(j, i, k)
        vector = self.brackets.get((i, j))
        return vector[k] if vector else Fraction(0)

    def bracket_basis(self, i: int, j: int) -> List[Fraction]:
        return [self.structure_constant(i, j, k) for k in range(self.dim)]

    def bracket(self, x: Sequence[RationalLike], y: Sequence[RationalLike]) -> List[Fraction]:
        """Bracket of two coordinate vectors."""
        x = [to_rational(v) for v in x]
        y = [to_rational(v) for v in y]
        result = [Fraction(0)] * self.dim
        for (i, j), vector in self.brackets.items():
            weight = x[i] * y[j] - x[j] * y[i]
            if weight:
                for k, c in enumerate(vector):
                    result[k] += weight * c
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and dict(self.brackets) == dict(other.brackets)

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self.brackets.items())))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, brackets={dict(self.brackets)})"


@dataclass(frozen=True)
class LieFiberBundle:
    """A Lie algebra over every point of a finite base; the anchor is zero."""

    fibers: Mapping[str, LieAlgebra]

    def __post_init__(self) -> None:
        validate_fibers(self.fibers)
        object.__setattr__(self, "fibers", dict(self.fibers))

    @classmethod
    def constant(cls, points: Iterable[str], algebra: LieAlgebra) -> "LieFiberBundle":
        return cls({str(point): algebra for point in points})

    @property
    def base(self) -> Tuple[str, ...]:
        return tuple(self.fibers)

    def fiber(self, point: str) -> LieAlgebra:
        return self.fibers[point]

    def dim(self, point: str) -> int:
        return self.fibers[point].dim

    def validate(self) -> CheckResult:
        for point, algebra in self.fibers.items():
            result = validate_lie(algebra)
            if not result.ok:
                failure = result.failure
                witness = dict(failure.witness, point=point)
                return CheckResult.failed(
                    type(failure)(failure.check, f"fiber over {point!r}: {failure.message}", witness)
                )
        return CheckResult.passed()


@dataclass(frozen=True)
class LinearLieMorphism:
    """A linear map between Lie algebras, as a target_dim × source_dim matrix."""

    source: LieAlgebra
    target: LieAlgebra
    matrix: SparseMatrix

    def __post_init__(self) -> None:
        validate_morphism_shape(self.source.dim, self.target.dim, self.matrix.shape)

    @classmethod
    def identity(cls, algebra: LieAlgebra) -> "LinearLieMorphism":
        return cls(algebra, algebra, SparseMatrix.identity(algebra.dim))

    def then(self, other: "LinearLieMorphism") -> "LinearLieMorphism":
        """`other` after `self`."""
        return LinearLieMorphism(self.source, other.target, other.matrix @ self.matrix)


__all__ = ["Bracket", "LieAlgebra", "LieFiberBundle", "LinearLieMorphism"]
