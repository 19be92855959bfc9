import pytest

from laq.builders import pair_zero, product, trivial_algebroid
from laq.cli.selftest import (
    HEISENBERG_INVOLUTION,
    SL2_EF_SWAP,
    builder_outputs,
    equivariant_sl2,
    equivariant_swap,
    matched_pair_z2,
    multiplicative_mutations,
    point_bundle,
)
from laq.exactla import SparseMatrix, rank
from laq.groupoid import ComposableTuple, face, identity_groupoid, nerve
from laq.lagroupoid import (
    LAGroupoid,
    ambient_face,
    check_multiplicative,
    check_simplicial_q_structure,
    compatible_basis,
    core_dims,
    face_matrix,
    lifted_differential,
    nerve_algebroid,
    nerve_face_linear,
    vacancy_check,
    validate_la,
)
from laq.liealg import LieAlgebra, LieFiberBundle, LinearLieMorphism, ce_cohomology_dims, is_lie_morphism
from laq.liealg.catalog import abelian, heisenberg, sl2
from laq.shared.data_types import LAFailure, RelatednessFailure
from laq.shared.errors import IndexOutOfRange
from laq.superalg import is_homological

BUILDERS = builder_outputs()
MUTATION_LEVELS = {"nonabelian arrows": 1, "nonabelian base fiber": 1, "doubled multiplication": 2}


def line_over_zero():
    """Ω = ℚ over the unit of a point with A = 0: legal, but s̃ is not injective."""
    g = identity_groupoid(["x"])
    unit = g.unit["x"]
    return LAGroupoid(
        base=g,
        side=LieFiberBundle({"x": LieAlgebra(0)}),
        top=LieFiberBundle({unit: abelian(1)}),
        src_lin={unit: SparseMatrix.zeros(0, 1)},
        tgt_lin={unit: SparseMatrix.zeros(0, 1)},
        mult_lin={(unit, unit): SparseMatrix.from_dense([[1, 1]])},
        unit_lin={"x": SparseMatrix.zeros(1, 0)},
        inv_lin={unit: SparseMatrix.from_dense([[-1]])},
    )


@pytest.mark.parametrize("name,l,window", BUILDERS, ids=[b[0] for b in BUILDERS])
def test_builder_outputs_are_la_groupoids(name, l, window):
    assert validate_la(l).ok, name
    assert check_multiplicative(l).ok, name


def test_line_over_zero_is_legal_but_not_vacant():
    l = line_over_zero()
    assert validate_la(l).ok
    assert not vacancy_check(l)
    assert core_dims(l) == {l.base.unit["x"]: 1}


def test_vacant_builders_have_zero_core():
    l = equivariant_swap()
    assert vacancy_check(l)
    assert set(core_dims(l).values()) == {0}


def test_target_that_is_not_a_morphism_is_reported(trivial_sl2):
    unit = trivial_sl2.base.arrows[0]
    broken = trivial_sl2.replace(tgt_lin={unit: SL2_EF_SWAP})
    verdict = validate_la(broken)
    assert not verdict.ok
    assert isinstance(verdict.failure, LAFailure)
    assert verdict.failure.check == "a_source_target"
    assert verdict.failure.witness["arrow"] == unit


def test_shape_mismatch_is_rejected_at_construction(trivial_sl2):
    unit = trivial_sl2.base.arrows[0]
    with pytest.raises(ValueError):
        trivial_sl2.replace(src_lin={unit: SparseMatrix.identity(2)})


@pytest.mark.parametrize(
    "build,q,dims",
    [
        (equivariant_swap, 0, (2,)),
        (equivariant_swap, 1, (2, 2)),
        (equivariant_swap, 2, (2, 2, 2, 2)),
    ],
)
def test_nerve_fiber_dims_of_vacant_square(build, q, dims):
    assert nerve_algebroid(build(), q).dims() == dims


def test_second_nerve_level_of_trivial_algebroid(trivial_sl2):
    level = nerve_algebroid(trivial_sl2, 2)
    (t,) = level.tuples
    fiber = level.fiber(t)
    assert fiber.component_dims == (3, 3)
    assert fiber.dim == 3
    assert ce_cohomology_dims(fiber.algebra, 3) == (1, 0, 0, 1)


def test_nerve_levels_are_cached(trivial_sl2):
    assert nerve_algebroid(trivial_sl2, 2) is nerve_algebroid(trivial_sl2, 2)


def test_faces_agree_on_the_diagonal(trivial_sl2):
    (t,) = nerve(trivial_sl2.base, 2)
    faces = [face_matrix(trivial_sl2, t, i) for i in range(3)]
    assert faces[0] == faces[1] == faces[2]
    assert rank(faces[0]) == 3


def test_compatible_basis_is_full_below_level_two(trivial_sl2):
    (t,) = nerve(trivial_sl2.base, 1)
    assert compatible_basis(trivial_sl2, t).dim == 3
    assert compatible_basis(trivial_sl2, ComposableTuple.of_object("pt")).dim == 3


def test_lifted_fields_are_homological(trivial_sl2):
    for q in range(3):
        field = lifted_differential(trivial_sl2, q)
        for t in nerve(trivial_sl2.base, q):
            assert is_homological(field.at(t)).ok


@pytest.mark.parametrize("build,q_max", [(lambda: trivial_algebroid(LieFiberBundle.constant(["pt"], abelian(2))), 3), (equivariant_swap, 2)])
def test_simplicial_q_structure_holds(build, q_max):
    assert check_simplicial_q_structure(build(), q_max).ok


@pytest.mark.parametrize("name,mutated", multiplicative_mutations(), ids=[m[0] for m in multiplicative_mutations()])
def test_mutations_break_multiplicativity(name, mutated):
    verdict = check_multiplicative(mutated)
    assert not verdict.ok
    assert isinstance(verdict.failure, RelatednessFailure)
    assert verdict.failure.check == "multiplicative"
    assert verdict.failure.witness["level"] == MUTATION_LEVELS[name]


def test_face_index_out_of_range(trivial_sl2):
    (t,) = nerve(trivial_sl2.base, 1)
    with pytest.raises(IndexOutOfRange):
        ambient_face(trivial_sl2, t, 2)
    with pytest.raises(IndexOutOfRange):
        nerve_face_linear(trivial_sl2, 1, 2)


@pytest.mark.parametrize(
    "build",
    [
        equivariant_sl2,
        lambda: matched_pair_z2(heisenberg(), HEISENBERG_INVOLUTION),
        lambda: product(trivial_algebroid(point_bundle(sl2())), pair_zero(["a", "b"])),
    ],
    ids=["equivariant sl2", "vacant heisenberg", "sl2 times pair"],
)
def test_face_maps_are_lie_morphisms_up_to_level_four(build):
    l = build()
    for q in range(1, 5):
        upper, lower = nerve_algebroid(l, q), nerve_algebroid(l, q - 1)
        for i in range(q + 1):
            for t, matrix in nerve_face_linear(l, q, i).items():
                target = lower.fiber(face(l.base, q, i, t)).algebra
                assert is_lie_morphism(LinearLieMorphism(upper.fiber(t).algebra, target, matrix)).ok
