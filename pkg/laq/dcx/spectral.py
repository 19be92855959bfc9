"""
First and second pages of the two spectral sequences of a double complex.

"delta-first" takes cohomology along q (δ) first and then along p (the map
induced by ψ); "psi-first" does the reverse. Entries that need a differential
leaving the window are masked: one band for E1, two for E2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict

import numpy as np

from laq.exactla import SparseMatrix, Subspace, image, intersect, kernel, preimage, subquotient_dim, subspace_sum

from .assemble import parallel_map
from .data_types import Block, DoubleComplex, SpectralPage

ORIENTATIONS = ("delta-first", "psi-first")

Arrow = Callable[[int, int], SparseMatrix]


@dataclass(frozen=True)
class _Directions:
    """Maps into each block along the first and second differential."""

    first_into: Arrow
    second_into: Arrow
    first_step: Block
    second_step: Block


def _directions(c: DoubleComplex, orientation: str) -> _Directions:
    if orientation == "delta-first":
        return _Directions(c.delta_into, c.psi_into, (0, 1), (1, 0))
    if orientation == "psi-first":
        return _Directions(c.psi_into, c.delta_into, (1, 0), (0, 1))
    raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}.")


def _shift(block: Block, step: Block, sign: int = 1) -> Block:
    return block[0] + sign * step[0], block[1] + sign * step[1]


def _inside(c: DoubleComplex, block: Block) -> bool:
    return 0 <= block[0] <= c.p_max and 0 <= block[1] <= c.q_max


def _into(c: DoubleComplex, arrow: Arrow, block: Block, step: Block) -> SparseMatrix:
    """The map arriving at `block`, or zero from the zero space when its source is outside."""
    p, q = block
    if not _inside(c, _shift(block, step, -1)):
        return SparseMatrix.zeros(c.dim(p, q), 0)
    return arrow(p, q)


def _validity(c: DoubleComplex, bands: int, d: _Directions) -> np.ndarray:
    mask = np.zeros((c.p_max + 1, c.q_max + 1), dtype=bool)
    for p, q in c.blocks():
        needed = [_shift((p, q), d.first_step)]
        if bands == 2:
            needed.append(_shift((p, q), d.second_step))
        mask[p, q] = all(_inside(c, block) for block in needed)
    return mask


def _cycles(c: DoubleComplex, d: _Directions, block: Block) -> Subspace:
    out = _shift(block, d.first_step)
    return kernel(d.first_into(*out))


def _boundaries(c: DoubleComplex, d: _Directions, block: Block) -> Subspace:
    return image(_into(c, d.first_into, block, d.first_step))


def e1_page(c: DoubleComplex, orientation: str = "delta-first") -> SpectralPage:
    d = _directions(c, orientation)
    validity = _validity(c, 1, d)
    valid = [block for block in c.blocks() if validity[block]]

    def entry(block: Block) -> int:
        return subquotient_dim(_cycles(c, d, block), _boundaries(c, d, block))

    return SpectralPage.from_grid(1, orientation, parallel_map(entry, valid), validity)


def e2_page(c: DoubleComplex, orientation: str = "delta-first") -> SpectralPage:
    """
    E2 = {first-cycles whose second image is a first-boundary}
         / (first-boundaries + second images of first-cycles).
    """
    d = _directions(c, orientation)
    validity = _validity(c, 2, d)
    valid = [block for block in c.blocks() if validity[block]]

    def entry(block: Block) -> int:
        cycles = _cycles(c, d, block)
        boundaries = _boundaries(c, d, block)
        forward = _shift(block, d.second_step)
        second_out = d.second_into(*forward)
        closed = intersect(cycles, preimage(second_out, _boundaries(c, d, forward)))
        backward = _shift(block, d.second_step, -1)
        if _inside(c, backward):
            incoming = d.second_into(*block) @ _cycles(c, d, backward).matrix()
            exact = subspace_sum(image(incoming), boundaries)
        else:
            exact = boundaries
        return subquotient_dim(closed, exact)

    return SpectralPage.from_grid(2, orientation, parallel_map(entry, valid), validity)


__all__ = ["ORIENTATIONS", "e1_page", "e2_page"]
