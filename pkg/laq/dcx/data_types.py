"""
Double complexes, spectral pages and cohomology tables.

Blocks are indexed by (p, q) with 0 <= p <= p_max and 0 <= q <= q_max.
`delta[(p, q)]` maps C^{p,q-1} -> C^{p,q} (present for q >= 1) and
`psi[(p, q)]` maps C^{p,q} -> C^{p+1,q} (present for p < p_max). Stored
matrices are unsigned; the (-1)^p of the total differential is applied only
when the total matrix is formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from laq.exactla import SparseMatrix

Block = Tuple[int, int]


@dataclass(frozen=True)
class DoubleComplex:
    window: Tuple[int, int]
    labels: Mapping[Block, Tuple[str, ...]]
    delta: Mapping[Block, SparseMatrix]
    psi: Mapping[Block, SparseMatrix]
    embeddings: Optional[Mapping[Block, SparseMatrix]] = None

    @property
    def p_max(self) -> int:
        return self.window[0]

    @property
    def q_max(self) -> int:
        return self.window[1]

    def blocks(self) -> List[Block]:
        return [(p, q) for p in range(self.p_max + 1) for q in range(self.q_max + 1)]

    def dim(self, p: int, q: int) -> int:
        return len(self.labels.get((p, q), ()))

    def delta_into(self, p: int, q: int) -> SparseMatrix:
        """δ: C^{p,q-1} -> C^{p,q}; the zero map from the zero space when q == 0."""
        if q == 0:
            return SparseMatrix.zeros(self.dim(p, 0), 0)
        return self.delta[(p, q)]

    def psi_into(self, p: int, q: int) -> SparseMatrix:
        """ψ: C^{p-1,q} -> C^{p,q}; the zero map from the zero space when p == 0."""
        if p == 0:
            return SparseMatrix.zeros(self.dim(0, q), 0)
        return self.psi[(p - 1, q)]

    def dims_grid(self) -> List[List[int]]:
        return [[self.dim(p, q) for q in range(self.q_max + 1)] for p in range(self.p_max + 1)]


@dataclass(frozen=True)
class CohomologyTable:
    dims: Tuple[int, ...]
    window: Tuple[int, int]

    @property
    def max_degree(self) -> int:
        return len(self.dims) - 1


@dataclass(frozen=True, eq=False)
class SpectralPage:
    """
    Dimensions of one page, indexed [p, q], with a validity mask.

    `dims` is a masked integer array whose mask is the complement of
    `validity`; entries outside the certified region are never reported.
    """

    page: int
    orientation: str
    dims: np.ma.MaskedArray
    validity: np.ndarray = field(repr=False)

    @classmethod
    def from_grid(cls, page: int, orientation: str, values: Dict[Block, int], validity: np.ndarray) -> "SpectralPage":
        grid = np.zeros(validity.shape, dtype=np.int64)
        for (p, q), value in values.items():
            grid[p, q] = value
        return cls(page, orientation, np.ma.masked_array(grid, mask=~validity), validity)

    def value(self, p: int, q: int) -> Optional[int]:
        if not self.validity[p, q]:
            return None
        return int(self.dims.data[p, q])

    def to_rows(self) -> List[List[Optional[int]]]:
        rows, cols = self.validity.shape
        return [[self.value(p, q) for q in range(cols)] for p in range(rows)]

    def column(self, q: int) -> List[Optional[int]]:
        """All p at fixed q."""
        return [self.value(p, q) for p in range(self.validity.shape[0])]

    def nonzero_blocks(self) -> List[Block]:
        return [
            (int(p), int(q))
            for p, q in zip(*np.nonzero(self.dims.filled(0)))
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpectralPage):
            return NotImplemented
        return (
            self.page == other.page
            and self.orientation == other.orientation
            and np.array_equal(self.validity, other.validity)
            and self.to_rows() == other.to_rows()
        )


CochainAction = Mapping[Block, List[SparseMatrix]]

__all__ = ["Block", "DoubleComplex", "CohomologyTable", "SpectralPage", "CochainAction"]
