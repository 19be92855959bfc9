"""Double complexes of LA-groupoids: assembly, total cohomology, spectral pages, invariants."""

from .assemble import assemble, total_cohomology, total_dims, total_matrix, verify_double_complex
from .data_types import CochainAction, CohomologyTable, DoubleComplex, SpectralPage
from .invariants import (
    fiber_action,
    fixed_subspace,
    groupoid_cochain_action,
    invariant_forms,
    invariant_subcomplex,
    last_component_map,
    tensor_split_basis,
)
from .spectral import ORIENTATIONS, e1_page, e2_page

__all__ = [
    "assemble",
    "total_cohomology",
    "total_dims",
    "total_matrix",
    "verify_double_complex",
    "CochainAction",
    "CohomologyTable",
    "DoubleComplex",
    "SpectralPage",
    "fiber_action",
    "fixed_subspace",
    "groupoid_cochain_action",
    "invariant_forms",
    "invariant_subcomplex",
    "last_component_map",
    "tensor_split_basis",
    "ORIENTATIONS",
    "e1_page",
    "e2_page",
]
