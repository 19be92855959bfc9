"""Small Lie algebras used by builders, fixtures and the self-test."""

from __future__ import annotations

from .data_types import LieAlgebra


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n)


def sl2() -> LieAlgebra:
    """Basis (h, e, f): [h, e] = 2e, [h, f] = -2f, [e, f] = h."""
    return LieAlgebra.from_brackets(3, [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])


def heisenberg() -> LieAlgebra:
    """[e_0, e_1] = e_2, all other brackets zero."""
    return LieAlgebra.from_brackets(3, [(0, 1, 2, 1)])


def two_dim_nonabelian() -> LieAlgebra:
    """[e_0, e_1] = e_1."""
    return LieAlgebra.from_brackets(2, [(0, 1, 1, 1)])


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """a ⊕ b with the basis of `a` first; cross brackets vanish."""
    entries = []
    for (i, j), vector in a.brackets.items():
        entries.extend((i, j, k, c) for k, c in enumerate(vector) if c)
    shift = a.dim
    for (i, j), vector in b.brackets.items():
        entries.extend((i + shift, j + shift, k + shift, c) for k, c in enumerate(vector) if c)
    return LieAlgebra.from_brackets(a.dim + b.dim, entries)


CATALOG = {
    "sl2": sl2,
    "heisenberg": heisenberg,
    "two_dim_nonabelian": two_dim_nonabelian,
}


def by_name(name: str) -> LieAlgebra:
    """Catalog lookup; `abelian<n>` gives the n-dimensional abelian algebra."""
    if name.startswith("abelian") and name[len("abelian"):].isdigit():
        return abelian(int(name[len("abelian"):]))
    try:
        return CATALOG[name]()
    except KeyError as exc:
        raise ValueError(f"unknown Lie algebra {name!r}.") from exc


__all__ = ["abelian", "sl2", "heisenberg", "two_dim_nonabelian", "direct_sum", "by_name", "CATALOG"]
