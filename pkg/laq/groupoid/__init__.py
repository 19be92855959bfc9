"""Finite groupoids, their nerves, and simplicial identity checks."""

from .catalog import (
    action_groupoid,
    cyclic_group,
    from_group_table,
    identity_groupoid,
    pair_groupoid,
    product_groupoid,
    symmetric_group,
)
from .data_types import ComposableTuple, FiniteGroupoid, pair_label
from .nerve import check_face_degeneracy_identities, check_simplicial_identities, degeneracy, face, nerve
from .validation import validate_groupoid

__all__ = [
    "ComposableTuple",
    "FiniteGroupoid",
    "pair_label",
    "action_groupoid",
    "cyclic_group",
    "from_group_table",
    "identity_groupoid",
    "pair_groupoid",
    "product_groupoid",
    "symmetric_group",
    "check_face_degeneracy_identities",
    "check_simplicial_identities",
    "degeneracy",
    "face",
    "nerve",
    "validate_groupoid",
]
