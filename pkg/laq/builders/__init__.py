"""Builders for the standard LA-groupoid families."""

from .data_types import GroupActionOnBundle
from .families import (
    equivariant,
    pair_zero,
    product,
    trivial_algebroid,
    trivial_groupoid,
    vacant_from_lifts,
    vacant_matched_pair,
)

__all__ = [
    "GroupActionOnBundle",
    "equivariant",
    "pair_zero",
    "product",
    "trivial_algebroid",
    "trivial_groupoid",
    "vacant_from_lifts",
    "vacant_matched_pair",
]
