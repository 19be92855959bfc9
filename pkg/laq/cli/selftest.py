"""
The acceptance suite behind `laq selftest`.

Each criterion returns a CheckResult; exceptions raised by the engine while a
criterion runs are reported as that criterion's failure. The standard example
models (ℤ/2 swap on ℚ², the e↔f, h↦−h involution of sl2) are built here and
reused by the test suite.
"""

from __future__ import annotations

import dataclasses
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, List, Sequence, Tuple

from laq.builders import (
    GroupActionOnBundle,
    equivariant,
    pair_zero,
    product,
    trivial_algebroid,
    trivial_groupoid,
    vacant_matched_pair,
)
from laq.dcx import (
    assemble,
    e2_page,
    groupoid_cochain_action,
    invariant_forms,
    invariant_subcomplex,
    tensor_split_basis,
    total_cohomology,
    verify_double_complex,
)
from laq.exactla import SparseMatrix, hstack, kron, rank, solve
from laq.groupoid import (
    ComposableTuple,
    FiniteGroupoid,
    check_face_degeneracy_identities,
    check_simplicial_identities,
    cyclic_group,
    face,
    nerve,
    pair_groupoid,
    symmetric_group,
    validate_groupoid,
)
from laq.groupoid.catalog import GROUP_OBJECT
from laq.lagroupoid import LAGroupoid, check_multiplicative
from laq.liealg import LieAlgebra, LieFiberBundle, LinearLieMorphism, ce_cohomology_dims, ce_derivation, ce_matrix
from laq.liealg import is_lie_morphism, validate_lie
from laq.liealg.catalog import abelian, heisenberg, sl2, two_dim_nonabelian
from laq.shared.data_types import CheckResult, Failure
from laq.shared.errors import LAQError, WindowTooSmall
from laq.superalg import is_homological
from laq.utils.config import DEFAULT_WINDOW
from laq.utils.logger import StructuredLogger

logger = StructuredLogger(__name__)

POINT = "pt"
SWAP = SparseMatrix.from_dense([[0, 1], [1, 0]])
# basis (h, e, f)
SL2_INVOLUTION = SparseMatrix.from_dense([[-1, 0, 0], [0, 0, 1], [0, 1, 0]])
SL2_EF_SWAP = SparseMatrix.from_dense([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
# e_0 <-> e_1, e_2 -> -e_2
HEISENBERG_INVOLUTION = SparseMatrix.from_dense([[0, 1, 0], [1, 0, 0], [0, 0, -1]])

EXPECTED_CE = {"abelian2": (1, 2, 1, 0), "sl2": (1, 0, 0, 1), "heisenberg": (1, 2, 2, 1)}
JACOBI_DRAWS = 200


@dataclass(frozen=True)
class Outcome:
    name: str
    result: CheckResult


def reference_algebras() -> List[Tuple[str, LieAlgebra]]:
    return [("abelian2", abelian(2)), ("sl2", sl2()), ("heisenberg", heisenberg())]


def point_bundle(algebra: LieAlgebra, point: str = POINT) -> LieFiberBundle:
    return LieFiberBundle.constant([point], algebra)


def z2_action(bundle: LieFiberBundle, involution: SparseMatrix) -> GroupActionOnBundle:
    """ℤ/2 fixing every point of `bundle` and acting on each fiber by `involution`."""
    group = cyclic_group(2)
    moves = {(x, gamma): x for x in bundle.base for gamma in group.arrows}
    matrices = {
        (x, gamma): SparseMatrix.identity(bundle.dim(x)) if gamma == "0" else involution
        for (x, gamma) in moves
    }
    return GroupActionOnBundle.by_group(group, bundle, moves, matrices)


def equivariant_swap() -> LAGroupoid:
    bundle = point_bundle(abelian(2))
    return equivariant(bundle, z2_action(bundle, SWAP))


def equivariant_sl2() -> LAGroupoid:
    bundle = point_bundle(sl2())
    return equivariant(bundle, z2_action(bundle, SL2_INVOLUTION))


def matched_pair_z2(algebra: LieAlgebra, involution: SparseMatrix) -> LAGroupoid:
    """ℤ/2 over its single object acting on `algebra` by `involution`."""
    group = cyclic_group(2)
    bundle = point_bundle(algebra, GROUP_OBJECT)
    lifts = {"0": SparseMatrix.identity(algebra.dim), "1": involution}
    return vacant_matched_pair(group, bundle, GroupActionOnBundle.along_groupoid(group, bundle, lifts))


def permutation_matrix(permutation: str) -> SparseMatrix:
    """e_x -> e_{σ(x)} for σ written as its image string."""
    n = len(permutation)
    return SparseMatrix(n, n, {(int(image), x): 1 for x, image in enumerate(permutation)})


def matched_pair_permutations(n: int) -> LAGroupoid:
    """S_n over its single object permuting the coordinates of abelian ℚ^n."""
    group = symmetric_group(n)
    bundle = point_bundle(abelian(n), GROUP_OBJECT)
    lifts = {sigma: permutation_matrix(sigma) for sigma in group.arrows}
    return vacant_matched_pair(group, bundle, GroupActionOnBundle.along_groupoid(group, bundle, lifts))


def _fail(check: str, message: str, **witness) -> CheckResult:
    return CheckResult.failed(Failure(check=check, message=message, witness=dict(witness)))


def _expect_equal(check: str, what: str, got: Sequence, expected: Sequence) -> CheckResult:
    if tuple(got) != tuple(expected):
        return _fail(check, f"{what}: got {tuple(got)}, expected {tuple(expected)}.", got=got, expected=expected)
    return CheckResult.passed()


# ---------------------------------------------------------------------- #
# Independent oracles
# ---------------------------------------------------------------------- #


def bar_cohomology_dims(g: FiniteGroupoid, max_degree: int) -> Tuple[int, ...]:
    """Cohomology of functions on the nerve under Σ(−1)^i σ_i^*, built straight from the face maps."""

    def coboundary(q: int) -> SparseMatrix:
        rows = nerve(g, q + 1)
        cols = {t: k for k, t in enumerate(nerve(g, q))}
        entries = {}
        for r, t in enumerate(rows):
            for i in range(q + 2):
                key = (r, cols[face(g, q + 1, i, t)])
                entries[key] = entries.get(key, Fraction(0)) + (-1) ** i
        return SparseMatrix(len(rows), len(cols), entries)

    ranks = [rank(coboundary(q)) for q in range(max_degree + 1)]
    return tuple(
        len(nerve(g, q)) - ranks[q] - (ranks[q - 1] if q else 0) for q in range(max_degree + 1)
    )


def brute_force_jacobi(dim: int, constants: dict) -> bool:
    """Jacobi on every ordered basis triple, from raw structure constants c[(i, j)][k]."""

    def bracket(x: List[Fraction], y: List[Fraction]) -> List[Fraction]:
        out = [Fraction(0)] * dim
        for i in range(dim):
            for j in range(dim):
                if x[i] and y[j] and i != j:
                    sign, key = (1, (i, j)) if i < j else (-1, (j, i))
                    for k, c in enumerate(constants.get(key, ())):
                        out[k] += sign * x[i] * y[j] * c
        return out

    basis = [[Fraction(int(i == j)) for i in range(dim)] for j in range(dim)]
    for x, y, z in cartesian(basis, repeat=3):
        total = [
            a + b + c
            for a, b, c in zip(bracket(bracket(x, y), z), bracket(bracket(y, z), x), bracket(bracket(z, x), y))
        ]
        if any(total):
            return False
    return True


def invariant_ce_dims(l: LAGroupoid, max_degree: int) -> Tuple[int, ...]:
    """CE cohomology of the group-invariant forms of the single fiber."""
    algebra = l.side.fiber(l.base.objects[0])
    forms = [invariant_forms(l, p) for p in range(max_degree + 2)]
    ranks = []
    for p in range(max_degree + 1):
        restricted = solve(forms[p + 1], ce_matrix(algebra, p) @ forms[p].matrix())
        ranks.append(rank(restricted))
    return tuple(forms[p].dim - ranks[p] - (ranks[p - 1] if p else 0) for p in range(max_degree + 1))


# ---------------------------------------------------------------------- #
# Criteria
# ---------------------------------------------------------------------- #


def check_alternation() -> CheckResult:
    """δ into C^{p,q} is the identity for even q and zero for odd q."""
    for name, algebra in reference_algebras():
        c = assemble(trivial_algebroid(point_bundle(algebra)), 4, 4)
        for p in range(5):
            for q in range(1, 5):
                block = c.delta[(p, q)]
                expected = SparseMatrix.identity(block.cols) if q % 2 == 0 else SparseMatrix.zeros(*block.shape)
                if block != expected:
                    return _fail("alternation", f"{name}: δ into C^{{{p},{q}}} is wrong.", algebra=name, block=(p, q))
    return CheckResult.passed()


def check_collapse() -> CheckResult:
    for name, algebra in reference_algebras():
        dims = total_cohomology(assemble(trivial_algebroid(point_bundle(algebra)), 4, 4), 3).dims
        for reference in (ce_cohomology_dims(algebra, 3), EXPECTED_CE[name]):
            verdict = _expect_equal("collapse", f"{name} total cohomology", dims, reference)
            if not verdict.ok:
                return verdict
    return CheckResult.passed()


def check_finite_groups() -> CheckResult:
    for name, group in (("Z/2", cyclic_group(2)), ("Z/3", cyclic_group(3)), ("S3", symmetric_group(3))):
        dims = total_cohomology(assemble(trivial_groupoid(group), 3, 3), 2).dims
        for reference in ((1, 0, 0), bar_cohomology_dims(group, 2)):
            verdict = _expect_equal("finite_group", f"{name} total cohomology", dims, reference)
            if not verdict.ok:
                return verdict
    return CheckResult.passed()


def check_pair_groupoids() -> CheckResult:
    for points in (["a", "b"], ["a", "b", "c"]):
        dims = total_cohomology(assemble(pair_zero(points), 4, 4), 3).dims
        verdict = _expect_equal("pair_groupoid", f"pair groupoid on {len(points)} points", dims, (1, 0, 0, 0))
        if not verdict.ok:
            return verdict
    return CheckResult.passed()


def check_equivariant_collapse() -> CheckResult:
    for name, build, degree, expected in (
        ("swap", equivariant_swap, 2, (1, 1, 0)),
        ("sl2", equivariant_sl2, 3, (1, 0, 0, 1)),
    ):
        l = build()
        c = assemble(l, degree + 1, degree + 1)
        dims = total_cohomology(c, degree).dims
        for reference in (expected, invariant_ce_dims(l, degree)):
            verdict = _expect_equal("equivariant", f"equivariant {name} total cohomology", dims, reference)
            if not verdict.ok:
                return verdict
        page = e2_page(c, "delta-first")
        stray = [block for block in page.nonzero_blocks() if block[1] != 0]
        if stray:
            return _fail("equivariant", f"equivariant {name}: E2 is not concentrated at q = 0.", blocks=stray)
        column = [v for v in page.column(0) if v is not None]
        verdict = _expect_equal("equivariant", f"equivariant {name} E2 column", column, expected[: len(column)])
        if not verdict.ok:
            return verdict
    return CheckResult.passed()


def check_product() -> CheckResult:
    for name, algebra in reference_algebras()[:2]:
        l = product(trivial_algebroid(point_bundle(algebra)), pair_zero(["a", "b"]))
        dims = total_cohomology(assemble(l, 4, 4), 3).dims
        verdict = _expect_equal("product", f"{name} × pair groupoid", dims, ce_cohomology_dims(algebra, 3))
        if not verdict.ok:
            return verdict
    return CheckResult.passed()


def vacant_models() -> List[Tuple[str, LAGroupoid, Tuple[int, int]]]:
    """Vacant LA-groupoids over finite groups, each with a window that stays cheap."""
    return [
        ("abelian2 under Z/2", matched_pair_z2(abelian(2), SWAP), (3, 3)),
        ("sl2 under Z/2", matched_pair_z2(sl2(), SL2_INVOLUTION), (3, 3)),
        ("heisenberg under Z/2", matched_pair_z2(heisenberg(), HEISENBERG_INVOLUTION), (3, 3)),
        ("abelian3 under S3", matched_pair_permutations(3), (2, 2)),
    ]


def _check_splitting(name: str, l: LAGroupoid, window: Tuple[int, int]) -> CheckResult:
    p_max, q_max = window
    degree = min(p_max, q_max) - 1
    group_complex = assemble(trivial_groupoid(l.base), 0, q_max)
    group_dims = total_cohomology(assemble(trivial_groupoid(l.base), p_max, q_max), degree).dims
    algebra = l.side.fiber(l.base.objects[0])
    c = assemble(l, p_max, q_max)
    forms = {p: invariant_forms(l, p) for p in range(p_max + 1)}
    split = {(p, q): tensor_split_basis(l, forms[p], p, q) for p in range(p_max + 1) for q in range(q_max + 1)}
    inv = invariant_subcomplex(c, groupoid_cochain_action(l, c.window))
    for (p, q), basis in split.items():
        tuples = len(nerve(l.base, q))
        if rank(basis) != inv.dim(p, q) or rank(hstack(basis, inv.embeddings[(p, q)])) != rank(basis):
            return _fail("invariant_splitting", f"{name}: split basis does not span the invariant block.", block=(p, q))
        if q >= 1:
            lhs = c.delta[(p, q)] @ split[(p, q - 1)]
            rhs = basis @ kron(group_complex.delta[(0, q)], SparseMatrix.identity(forms[p].dim))
            if lhs != rhs:
                return _fail("invariant_splitting", f"{name}: δ ≠ δ_G ⊗ 1 into C^{{{p},{q}}}.", block=(p, q))
        if p < p_max:
            restricted = solve(forms[p + 1], ce_matrix(algebra, p) @ forms[p].matrix())
            lhs = c.psi[(p, q)] @ basis
            rhs = split[(p + 1, q)] @ kron(SparseMatrix.identity(tuples), restricted)
            if lhs != rhs:
                return _fail("invariant_splitting", f"{name}: ψ ≠ 1 ⊗ d_A out of C^{{{p},{q}}}.", block=(p, q))
    algebra_dims = invariant_ce_dims(l, degree)
    factored = tuple(sum(group_dims[a] * algebra_dims[n - a] for a in range(n + 1)) for n in range(degree + 1))
    return _expect_equal("invariant_splitting", f"{name} invariant cohomology", total_cohomology(inv, degree).dims, factored)


def check_invariant_splitting() -> CheckResult:
    """On invariant cochains δ acts as δ_G ⊗ 1 and ψ as 1 ⊗ d_A, and the cohomology factors."""
    for name, l, window in vacant_models():
        verdict = _check_splitting(name, l, window)
        if not verdict.ok:
            return verdict
    return CheckResult.passed()


def builder_outputs() -> List[Tuple[str, LAGroupoid, Tuple[int, int]]]:
    """Every builder family at a size whose default window stays cheap."""
    return [
        ("trivial_algebroid abelian2", trivial_algebroid(point_bundle(abelian(2))), DEFAULT_WINDOW),
        ("trivial_algebroid sl2", trivial_algebroid(point_bundle(sl2())), DEFAULT_WINDOW),
        ("trivial_groupoid Z/3", trivial_groupoid(cyclic_group(3)), DEFAULT_WINDOW),
        ("pair_zero 2", pair_zero(["a", "b"]), DEFAULT_WINDOW),
        ("equivariant swap", equivariant_swap(), DEFAULT_WINDOW),
        ("equivariant sl2", equivariant_sl2(), DEFAULT_WINDOW),
        ("vacant sl2", matched_pair_z2(sl2(), SL2_INVOLUTION), DEFAULT_WINDOW),
        ("product abelian2 × pair", product(trivial_algebroid(point_bundle(abelian(2))), pair_zero(["a", "b"])), DEFAULT_WINDOW),
    ]


def check_double_complex_identities() -> CheckResult:
    for name, l, window in builder_outputs():
        verdict = verify_double_complex(assemble(l, *window, verify=False))
        if not verdict.ok:
            return _fail("double_complex", f"{name}: {verdict.failure.message}", model=name, **verdict.failure.witness)
    return CheckResult.passed()


def _face_multiplying_first(g: FiniteGroupoid, q: int, i: int, t: ComposableTuple) -> ComposableTuple:
    if q >= 2 and i == 0:
        c = t.components
        return ComposableTuple((g.compose(c[0], c[1]),) + c[2:])
    return face(g, q, i, t)


def check_simplicial() -> CheckResult:
    for g in (cyclic_group(2), cyclic_group(3), pair_groupoid(["1", "2", "3"])):
        for verdict in (check_simplicial_identities(g, 4), check_face_degeneracy_identities(g, 4)):
            if not verdict.ok:
                return verdict
    mutated = check_simplicial_identities(pair_groupoid(["1", "2"]), 3, face_fn=_face_multiplying_first)
    if mutated.ok:
        return _fail("simplicial", "a face map multiplying at i = 0 went undetected.")
    return CheckResult.passed()


def random_structure_constants(rng: random.Random) -> Tuple[int, dict]:
    """A random bracket table, sparse half of the time so that Jacobi sometimes holds."""
    dim = rng.randint(1, 4)
    density = rng.choice((0.15, 1.0))
    constants = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            row = tuple(Fraction(rng.randint(-2, 2)) if rng.random() < density else Fraction(0) for _ in range(dim))
            if any(row):
                constants[(i, j)] = row
    return dim, constants


def check_jacobi_homological(seed: int, draws: int = JACOBI_DRAWS) -> CheckResult:
    rng = random.Random(seed)
    for draw in range(draws):
        dim, constants = random_structure_constants(rng)
        algebra = LieAlgebra(dim, constants)
        jacobi = brute_force_jacobi(dim, constants)
        homological = is_homological(ce_derivation(algebra)).ok
        if jacobi != homological or jacobi != validate_lie(algebra).ok:
            return _fail(
                "jacobi_homological",
                f"draw {draw}: Jacobi {jacobi} but homological {homological}.",
                draw=draw,
                dim=dim,
            )
    return CheckResult.passed()


def multiplicative_mutations() -> List[Tuple[str, LAGroupoid]]:
    flat = trivial_algebroid(point_bundle(abelian(2)))
    swap = equivariant_swap()
    rigid = trivial_algebroid(point_bundle(sl2()))
    return [
        ("nonabelian arrows", flat.replace(top=LieFiberBundle({a: two_dim_nonabelian() for a in flat.base.arrows}))),
        ("nonabelian base fiber", swap.replace(side=LieFiberBundle({x: two_dim_nonabelian() for x in swap.base.objects}))),
        (
            "doubled multiplication",
            rigid.replace(
                mult_lin={pair: hstack(SparseMatrix.identity(3), SparseMatrix.identity(3)) for pair in rigid.mult_lin}
            ),
        ),
    ]


def check_multiplicativity() -> CheckResult:
    for name, l, _ in builder_outputs():
        verdict = check_multiplicative(l)
        if not verdict.ok:
            return _fail("multiplicative", f"{name}: {verdict.failure.message}", model=name)
    for name, mutated in multiplicative_mutations():
        if check_multiplicative(mutated).ok:
            return _fail("multiplicative", f"mutation {name!r} went undetected.", mutation=name)
    return CheckResult.passed()


def _corrupted_z2() -> FiniteGroupoid:
    g = cyclic_group(2)
    return FiniteGroupoid(g.objects, g.arrows, g.src, g.tgt, {**g.mult, ("1", "1"): "1"}, g.unit, g.inv)


def check_counterexamples() -> CheckResult:
    """Injected faults and documented counterexamples are all reported."""
    c = assemble(trivial_algebroid(point_bundle(sl2())), 4, 4)
    signed = dataclasses.replace(c, delta={**c.delta, (1, 2): c.delta[(1, 2)].scale(-1)})
    if verify_double_complex(signed).ok:
        return _fail("counterexamples", "a sign flip in δ went undetected.")
    try:
        total_cohomology(assemble(trivial_algebroid(point_bundle(sl2())), 2, 2), 3)
    except WindowTooSmall:
        pass
    else:
        return _fail("counterexamples", "a truncated window returned a cohomology table.")
    broken = LieAlgebra.from_brackets(3, [(0, 1, 0, 1), (1, 2, 1, 1)])
    jacobi = validate_lie(broken)
    if jacobi.ok or jacobi.failure.witness.get("triple") != (0, 1, 2):
        return _fail("counterexamples", "the broken Jacobi table was not caught on (0, 1, 2).")
    swap = is_lie_morphism(LinearLieMorphism(sl2(), sl2(), SL2_EF_SWAP))
    if swap.ok:
        return _fail("counterexamples", "e ↔ f with h fixed was accepted as a Lie morphism.")
    corrupted = validate_groupoid(_corrupted_z2())
    if corrupted.ok:
        return _fail("counterexamples", "the corrupted ℤ/2 table passed the groupoid axioms.")
    return CheckResult.passed()


def check_window_stability() -> CheckResult:
    for name, build in (
        ("trivial_algebroid abelian2", lambda: trivial_algebroid(point_bundle(abelian(2)))),
        ("trivial_groupoid Z/2", lambda: trivial_groupoid(cyclic_group(2))),
        ("equivariant swap", equivariant_swap),
    ):
        l = build()
        small = total_cohomology(assemble(l, 3, 3), 2).dims
        large = total_cohomology(assemble(l, 4, 4), 2).dims
        verdict = _expect_equal("window_stability", f"{name} under a larger window", large, small)
        if not verdict.ok:
            return verdict
    return CheckResult.passed()


def criteria(seed: int, draws: int = JACOBI_DRAWS) -> List[Tuple[str, Callable[[], CheckResult]]]:
    return [
        ("alternation", check_alternation),
        ("collapse", check_collapse),
        ("finite_groups", check_finite_groups),
        ("pair_groupoids", check_pair_groupoids),
        ("equivariant_collapse", check_equivariant_collapse),
        ("product", check_product),
        ("invariant_splitting", check_invariant_splitting),
        ("double_complex_identities", check_double_complex_identities),
        ("simplicial_identities", check_simplicial),
        ("jacobi_homological", lambda: check_jacobi_homological(seed, draws)),
        ("multiplicative", check_multiplicativity),
        ("counterexamples", check_counterexamples),
        ("window_stability", check_window_stability),
    ]


def run_selftest(seed: int, draws: int = JACOBI_DRAWS) -> List[Outcome]:
    outcomes = []
    for name, criterion in criteria(seed, draws):
        try:
            result = criterion()
        except LAQError as exc:
            result = _fail(name, f"{type(exc).__name__}: {exc}", **exc.witness)
        logger.info(f"selftest {name}: {'ok' if result.ok else 'FAIL'}")
        outcomes.append(Outcome(name, result))
    return outcomes


__all__ = [
    "Outcome",
    "POINT",
    "SWAP",
    "SL2_INVOLUTION",
    "SL2_EF_SWAP",
    "HEISENBERG_INVOLUTION",
    "reference_algebras",
    "point_bundle",
    "z2_action",
    "equivariant_swap",
    "equivariant_sl2",
    "matched_pair_z2",
    "permutation_matrix",
    "matched_pair_permutations",
    "vacant_models",
    "bar_cohomology_dims",
    "brute_force_jacobi",
    "invariant_ce_dims",
    "builder_outputs",
    "multiplicative_mutations",
    "criteria",
    "run_selftest",
]
