"""
Finite groupoids given by explicit multiplication tables.

Conventions: an arrow g goes from src(g) to tgt(g); the pair (g, h) is
composable iff src(g) == tgt(h), and then src(gh) = src(h), tgt(gh) = tgt(g).
A composable q-tuple (g_1, ..., g_q) satisfies src(g_i) == tgt(g_{i+1}).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from laq.shared.errors import IndexOutOfRange

from .validation import validate_labels, validate_table_shape


def pair_label(left: str, right: str) -> str:
    return f"({left},{right})"


@dataclass(frozen=True)
class ComposableTuple:
    """A point of the nerve: q composable arrows, or an object when q == 0."""

    components: Tuple[str, ...] = ()
    obj: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components and self.obj is None:
            raise ValueError("a level-0 tuple must name its object.")
        if self.components and self.obj is not None:
            raise ValueError("only level-0 tuples carry an object.")

    @classmethod
    def of_object(cls, obj: str) -> "ComposableTuple":
        return cls((), obj)

    @property
    def q(self) -> int:
        return len(self.components)

    def label(self) -> str:
        if self.obj is not None:
            return self.obj
        return "(" + ", ".join(self.components) + ")"

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True, eq=False)
class FiniteGroupoid:
    """
    Objects, arrows and structure tables of a finite groupoid.

    Construction only checks that every table refers to declared labels; the
    groupoid axioms are checked by `validate_groupoid`. Arrows are kept sorted by
    label so that nerve enumeration is lexicographic.
    """

    objects: Tuple[str, ...]
    arrows: Tuple[str, ...]
    src: Mapping[str, str]
    tgt: Mapping[str, str]
    mult: Mapping[Tuple[str, str], str]
    unit: Mapping[str, str]
    inv: Mapping[str, str]
    _nerve_cache: Dict[int, Tuple[ComposableTuple, ...]] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        objects = tuple(sorted(self.objects))
        arrows = tuple(sorted(self.arrows))
        validate_labels("objects", objects)
        validate_labels("arrows", arrows)
        src, tgt = dict(self.src), dict(self.tgt)
        mult = {(str(g), str(h)): str(gh) for (g, h), gh in self.mult.items()}
        unit, inv = dict(self.unit), dict(self.inv)
        validate_table_shape(objects, arrows, src, tgt, mult, unit, inv)
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "src", src)
        object.__setattr__(self, "tgt", tgt)
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "inv", inv)

    @property
    def is_one_object(self) -> bool:
        return len(self.objects) == 1

    def composable(self, g: str, h: str) -> bool:
        return self.src[g] == self.tgt[h]

    def compose(self, g: str, h: str) -> str:
        try:
            return self.mult[(g, h)]
        except KeyError as exc:
            raise IndexOutOfRange(f"arrows {g!r} and {h!r} do not compose.", witness={"pair": (g, h)}) from exc

    def arrows_into(self, obj: str) -> List[str]:
        return [g for g in self.arrows if self.tgt[g] == obj]

    def cached_level(self, q: int) -> Optional[Tuple[ComposableTuple, ...]]:
        return self._nerve_cache.get(q)

    def store_level(self, q: int, tuples: Iterable[ComposableTuple]) -> Tuple[ComposableTuple, ...]:
        with self._lock:
            return self._nerve_cache.setdefault(q, tuple(tuples))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroupoid):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.arrows == other.arrows
            and self.src == other.src
            and self.tgt == other.tgt
            and self.mult == other.mult
            and self.unit == other.unit
            and self.inv == other.inv
        )

    def __hash__(self) -> int:
        return hash((self.objects, self.arrows, tuple(sorted(self.mult.items()))))


__all__ = ["pair_label", "ComposableTuple", "FiniteGroupoid"]
