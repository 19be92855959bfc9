"""Actions of groups and groupoids on bundles of Lie algebras."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from laq.exactla import SparseMatrix
from laq.groupoid import FiniteGroupoid
from laq.liealg import LieFiberBundle, LinearLieMorphism, is_lie_morphism
from laq.shared.errors import ActionInvalid

Move = Tuple[str, str]


@dataclass(frozen=True)
class GroupActionOnBundle:
    """
    A right action x ↦ x·γ of `group` on the base points, lifted to the fibers.

    `moves[(x, γ)]` is x·γ and `lifts[(x, γ)]` is a Lie morphism A_{x·γ} -> A_x.
    Lifts compose as lift(x, γγ') = lift(x, γ) ∘ lift(x·γ, γ').
    """

    group: FiniteGroupoid
    moves: Mapping[Move, str]
    lifts: Mapping[Move, LinearLieMorphism]

    def __post_init__(self) -> None:
        object.__setattr__(self, "moves", dict(self.moves))
        object.__setattr__(self, "lifts", dict(self.lifts))
        if set(self.moves) != set(self.lifts):
            raise ActionInvalid("moves and lifts must be given for the same (point, arrow) pairs.")
        for x, gamma in self.moves:
            if gamma not in self.group.tgt:
                raise ActionInvalid(f"move ({x!r}, {gamma!r}) names an unknown arrow.", witness={"move": (x, gamma)})

    @classmethod
    def along_groupoid(
        cls,
        groupoid: FiniteGroupoid,
        bundle: LieFiberBundle,
        lifts: Mapping[str, SparseMatrix],
    ) -> "GroupActionOnBundle":
        """
        A groupoid acting on a bundle over its own objects: g moves t(g) to s(g)
        and lifts[g] maps A_{s g} -> A_{t g}.
        """
        moves: Dict[Move, str] = {}
        morphisms: Dict[Move, LinearLieMorphism] = {}
        for g in groupoid.arrows:
            key = (groupoid.tgt[g], g)
            moves[key] = groupoid.src[g]
            morphisms[key] = LinearLieMorphism(
                bundle.fiber(groupoid.src[g]), bundle.fiber(groupoid.tgt[g]), lifts[g]
            )
        return cls(groupoid, moves, morphisms)

    @classmethod
    def by_group(
        cls,
        group: FiniteGroupoid,
        bundle: LieFiberBundle,
        moves: Mapping[Move, str],
        matrices: Mapping[Move, SparseMatrix],
    ) -> "GroupActionOnBundle":
        lifts = {
            (x, gamma): LinearLieMorphism(bundle.fiber(moves[(x, gamma)]), bundle.fiber(x), matrices[(x, gamma)])
            for (x, gamma) in moves
        }
        return cls(group, moves, lifts)

    def validate(self) -> None:
        """Raise ActionInvalid unless every lift is a Lie morphism and lifts compose."""
        for key, lift in self.lifts.items():
            verdict = is_lie_morphism(lift)
            if not verdict.ok:
                raise ActionInvalid(
                    f"lift at {key} is not a Lie morphism: {verdict.failure.message}",
                    witness={"move": key, **verdict.failure.witness},
                )
        for (x, gamma), y in self.moves.items():
            if gamma == self.group.unit.get(self.group.tgt[gamma]) and x == y:
                if self.lifts[(x, gamma)].matrix != SparseMatrix.identity(self.lifts[(x, gamma)].source.dim):
                    raise ActionInvalid(f"the unit does not lift to the identity at {x!r}.", witness={"move": (x, gamma)})
            for delta in self.group.arrows:
                if (y, delta) not in self.moves or not self.group.composable(gamma, delta):
                    continue
                product = self.group.compose(gamma, delta)
                if (x, product) not in self.lifts:
                    raise ActionInvalid(f"no lift for ({x!r}, {product!r}).", witness={"move": (x, product)})
                composite = self.lifts[(x, gamma)].matrix @ self.lifts[(y, delta)].matrix
                if composite != self.lifts[(x, product)].matrix:
                    raise ActionInvalid(
                        f"lifts of {gamma!r} and {delta!r} do not compose at {x!r}.",
                        witness={"point": x, "pair": (gamma, delta)},
                    )


__all__ = ["Move", "GroupActionOnBundle"]
