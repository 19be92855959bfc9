"""
LA-groupoids over finite bases and the algebroids on their nerves.

An `LAGroupoid` is a groupoid G ⇉ M together with a bundle of Lie algebras A
over the objects and a bundle Ω over the arrows, with fiberwise-linear
structure maps s̃, t̃: Ω_g -> A_{s g}, A_{t g}, multiplication
m̃: Ω_g ⊕ Ω_h -> Ω_{gh}, unit ẽ: A_x -> Ω_{1_x} and inverse ĩ: Ω_g -> Ω_{g⁻¹}.
Construction only checks matrix shapes; `validate_la` checks the rest.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, Mapping, Tuple

from laq.exactla import SparseMatrix, Subspace
from laq.groupoid import ComposableTuple, FiniteGroupoid
from laq.liealg import LieAlgebra, LieFiberBundle
from laq.superalg import DerivationSpec

from .validation import validate_structure_shapes


@dataclass(frozen=True, eq=False)
class LAGroupoid:
    base: FiniteGroupoid
    side: LieFiberBundle
    top: LieFiberBundle
    src_lin: Mapping[str, SparseMatrix]
    tgt_lin: Mapping[str, SparseMatrix]
    mult_lin: Mapping[Tuple[str, str], SparseMatrix]
    unit_lin: Mapping[str, SparseMatrix]
    inv_lin: Mapping[str, SparseMatrix]
    _cache: Dict[Hashable, Any] = field(default_factory=dict, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    def __post_init__(self) -> None:
        for name in ("src_lin", "tgt_lin", "mult_lin", "unit_lin", "inv_lin"):
            object.__setattr__(self, name, dict(getattr(self, name)))
        validate_structure_shapes(self)

    def side_dim(self, obj: str) -> int:
        return self.side.dim(obj)

    def top_dim(self, arrow: str) -> int:
        return self.top.dim(arrow)

    def cached(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        """Memoize a derived structure; the first writer wins."""
        if key in self._cache:
            return self._cache[key]
        value = compute()
        with self._lock:
            return self._cache.setdefault(key, value)

    def replace(self, **changes: Any) -> "LAGroupoid":
        """A copy with some fields swapped and an empty cache."""
        fields = {
            "base": self.base,
            "side": self.side,
            "top": self.top,
            "src_lin": self.src_lin,
            "tgt_lin": self.tgt_lin,
            "mult_lin": self.mult_lin,
            "unit_lin": self.unit_lin,
            "inv_lin": self.inv_lin,
        }
        fields.update(changes)
        return LAGroupoid(**fields)

    def __repr__(self) -> str:
        return (
            f"LAGroupoid(objects={len(self.base.objects)}, arrows={len(self.base.arrows)}, "
            f"side_dims={[self.side_dim(x) for x in self.base.objects]})"
        )


@dataclass(frozen=True)
class NerveFiber:
    """
    The fiber of Ω^(q) over one composable tuple.

    `basis` spans the compatible vectors inside the direct sum of the component
    fibers (`component_dims`); `algebra` holds the induced structure constants
    in that basis.
    """

    tuple: ComposableTuple
    component_dims: Tuple[int, ...]
    basis: Subspace
    algebra: LieAlgebra

    @property
    def dim(self) -> int:
        return self.basis.dim


@dataclass(frozen=True)
class NerveAlgebroid:
    q: int
    tuples: Tuple[ComposableTuple, ...]
    fibers: Mapping[ComposableTuple, NerveFiber]

    def fiber(self, t: ComposableTuple) -> NerveFiber:
        return self.fibers[t]

    def dims(self) -> Tuple[int, ...]:
        return tuple(self.fibers[t].dim for t in self.tuples)


@dataclass(frozen=True)
class LiftedField:
    """The homological field ψ^(q): the CE derivation of every nerve fiber."""

    q: int
    derivations: Mapping[ComposableTuple, DerivationSpec]

    def at(self, t: ComposableTuple) -> DerivationSpec:
        return self.derivations[t]


__all__ = ["LAGroupoid", "NerveFiber", "NerveAlgebroid", "LiftedField"]
