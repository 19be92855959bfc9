"""
Exact rational matrices and subspaces.

`SparseMatrix` stores only nonzero entries as `Fraction`s and is immutable after
construction. Arithmetic is delegated to sympy's `DomainMatrix` over `QQ`; the
row reduction behind rank/kernel/image lives in `laq.exactla.elimination`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

Rational = Fraction
RationalLike = Union[int, Fraction, str]
Entries = Mapping[Tuple[int, int], Fraction]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or `"a/b"` string into a `Fraction`."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals.")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            numerator, _, denominator = text.partition("/")
            if int(denominator) == 0:
                raise ZeroDivisionError(f"zero denominator in {value!r}.")
            return Fraction(int(numerator), int(denominator))
        return Fraction(int(text))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        # sympy QQ/ZZ ground elements (python or gmpy flavoured)
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot interpret {value!r} as a rational.")


def _from_domain_matrix(matrix: DomainMatrix) -> "SparseMatrix":
    rows, cols = matrix.shape
    entries: Dict[Tuple[int, int], Fraction] = {}
    for i, row in matrix.to_sparse().rep.items():
        for j, value in row.items():
            entries[(i, j)] = to_rational(value)
    return SparseMatrix(rows, cols, entries)


@dataclass(frozen=True, eq=False)
class SparseMatrix:
    """A rows × cols rational matrix with no stored zeros."""

    rows: int
    cols: int
    entries: Entries = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative.")
        clean: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), value in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise ValueError(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix.")
            rational = to_rational(value)
            if rational:
                clean[(i, j)] = rational
        object.__setattr__(self, "entries", clean)

    # ------------------------------------------------------------------ #
    # Constructors
    # ------------------------------------------------------------------ #

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[RationalLike]], cols: Optional[int] = None) -> "SparseMatrix":
        rows = len(data)
        width = cols if cols is not None else (len(data[0]) if rows else 0)
        entries = {}
        for i, row in enumerate(data):
            if len(row) != width:
                raise ValueError("ragged rows in dense matrix.")
            for j, value in enumerate(row):
                entries[(i, j)] = value
        return cls(rows, width, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: int) -> "SparseMatrix":
        entries = {}
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ValueError("column length does not match the row count.")
            for i, value in enumerate(column):
                entries[(i, j)] = value
        return cls(rows, len(columns), entries)

    # ------------------------------------------------------------------ #
    # Views
    # ------------------------------------------------------------------ #

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def get(self, i: int, j: int) -> Fraction:
        return self.entries.get((i, j), Fraction(0))

    def column(self, j: int) -> List[Fraction]:
        out = [Fraction(0)] * self.rows
        for (i, col), value in self.entries.items():
            if col == j:
                out[i] = value
        return out

    def columns(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.rows for _ in range(self.cols)]
        for (i, j), value in self.entries.items():
            out[j][i] = value
        return out

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), value in self.entries.items():
            out[i][j] = value
        return out

    def row_dict(self) -> Dict[int, Dict[int, Fraction]]:
        rows: Dict[int, Dict[int, Fraction]] = {}
        for (i, j), value in self.entries.items():
            rows.setdefault(i, {})[j] = value
        return rows

    def to_domain_matrix(self) -> DomainMatrix:
        dod = {
            i: {j: QQ(value.numerator, value.denominator) for j, value in row.items()}
            for i, row in self.row_dict().items()
        }
        return DomainMatrix(dod, self.shape, QQ)

    # ------------------------------------------------------------------ #
    # Arithmetic
    # ------------------------------------------------------------------ #

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    @property
    def T(self) -> "SparseMatrix":
        return self.transpose()

    def scale(self, factor: RationalLike) -> "SparseMatrix":
        c = to_rational(factor)
        return SparseMatrix(self.rows, self.cols, {key: c * v for key, v in self.entries.items()})

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"cannot add {self.shape} and {other.shape} matrices.")
        if self.is_zero() or other.is_zero():
            return other if self.is_zero() else self
        return _from_domain_matrix(self.to_domain_matrix() + other.to_domain_matrix())

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}.")
        if self.is_zero() or other.is_zero():
            return SparseMatrix.zeros(self.rows, other.cols)
        return _from_domain_matrix(self.to_domain_matrix().matmul(other.to_domain_matrix()))

    def column_slice(self, start: int, stop: int) -> "SparseMatrix":
        """Columns start..stop-1 as a new matrix."""
        return SparseMatrix(
            self.rows,
            stop - start,
            {(i, j - start): v for (i, j), v in self.entries.items() if start <= j < stop},
        )

    def apply(self, vector: Sequence[RationalLike]) -> List[Fraction]:
        """Multiply by a dense coordinate vector."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match the column count.")
        out = [Fraction(0)] * self.rows
        for (i, j), value in self.entries.items():
            out[i] += value * to_rational(vector[j])
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and dict(self.entries) == dict(other.entries)

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def block_matrix(
    row_dims: Sequence[int],
    col_dims: Sequence[int],
    blocks: Mapping[Tuple[int, int], SparseMatrix],
) -> SparseMatrix:
    """Place blocks (keyed by block row/column) into one matrix; missing blocks are zero."""
    row_offsets = [sum(row_dims[:k]) for k in range(len(row_dims))]
    col_offsets = [sum(col_dims[:k]) for k in range(len(col_dims))]
    entries: Dict[Tuple[int, int], Fraction] = {}
    for (bi, bj), block in blocks.items():
        if block.shape != (row_dims[bi], col_dims[bj]):
            raise ValueError(
                f"block ({bi}, {bj}) has shape {block.shape}, expected {(row_dims[bi], col_dims[bj])}."
            )
        for (i, j), value in block.entries.items():
            key = (row_offsets[bi] + i, col_offsets[bj] + j)
            entries[key] = entries.get(key, Fraction(0)) + value
    return SparseMatrix(sum(row_dims), sum(col_dims), entries)


def hstack(*matrices: SparseMatrix, rows: Optional[int] = None) -> SparseMatrix:
    height = rows if rows is not None else (matrices[0].rows if matrices else 0)
    return block_matrix([height], [m.cols for m in matrices], {(0, k): m for k, m in enumerate(matrices)})


def vstack(*matrices: SparseMatrix, cols: Optional[int] = None) -> SparseMatrix:
    width = cols if cols is not None else (matrices[0].cols if matrices else 0)
    return block_matrix([m.rows for m in matrices], [width], {(k, 0): m for k, m in enumerate(matrices)})


def kron(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Kronecker product; row (i, k) of the result is i * b.rows + k."""
    entries = {
        (i * b.rows + k, j * b.cols + l): x * y
        for (i, j), x in a.entries.items()
        for (k, l), y in b.entries.items()
    }
    return SparseMatrix(a.rows * b.rows, a.cols * b.cols, entries)


@dataclass(frozen=True, eq=False)
class Subspace:
    """
    A subspace of Q^ambient_dim given by linearly independent basis vectors.

    Build subspaces through `laq.exactla.elimination` (kernel, image, span,
    intersect); direct construction verifies independence.
    """

    ambient_dim: int
    basis: Tuple[Tuple[Fraction, ...], ...] = ()
    _trusted: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        normalized = tuple(tuple(to_rational(v) for v in vector) for vector in self.basis)
        for vector in normalized:
            if len(vector) != self.ambient_dim:
                raise ValueError(
                    f"basis vector of length {len(vector)} in an ambient space of dimension {self.ambient_dim}."
                )
        object.__setattr__(self, "basis", normalized)
        if normalized and not self._trusted:
            from .elimination import rank

            if rank(self.matrix()) != len(normalized):
                raise ValueError("subspace basis vectors are linearly dependent.")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), _trusted=True)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        basis = tuple(
            tuple(Fraction(int(i == j)) for i in range(ambient_dim)) for j in range(ambient_dim)
        )
        return cls(ambient_dim, basis, _trusted=True)

    def matrix(self) -> SparseMatrix:
        """The ambient × dim matrix whose columns are the basis vectors."""
        return SparseMatrix.from_columns(self.basis, self.ambient_dim)

    def __eq__(self, other: object) -> bool:
        """Equal spans, whatever the bases."""
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient_dim != other.ambient_dim or self.dim != other.dim:
            return False
        if self.basis == other.basis or not self.basis:
            return True
        from .elimination import rank

        return rank(hstack(self.matrix(), other.matrix(), rows=self.ambient_dim)) == self.dim

    def __iter__(self) -> Iterator[Tuple[Fraction, ...]]:
        return iter(self.basis)


__all__ = [
    "Rational",
    "RationalLike",
    "to_rational",
    "SparseMatrix",
    "Subspace",
    "block_matrix",
    "hstack",
    "vstack",
    "kron",
]
