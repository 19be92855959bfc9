import dataclasses

import pytest

from laq.builders import pair_zero, trivial_algebroid, trivial_groupoid
from laq.cli.selftest import (
    EXPECTED_CE,
    HEISENBERG_INVOLUTION,
    bar_cohomology_dims,
    check_invariant_splitting,
    equivariant_sl2,
    equivariant_swap,
    invariant_ce_dims,
    matched_pair_permutations,
    matched_pair_z2,
    multiplicative_mutations,
    point_bundle,
)
from laq.dcx import (
    assemble,
    e1_page,
    e2_page,
    groupoid_cochain_action,
    invariant_forms,
    invariant_subcomplex,
    total_cohomology,
    total_dims,
    verify_double_complex,
)
from laq.exactla import SparseMatrix
from laq.groupoid import cyclic_group, symmetric_group
from laq.liealg import ce_cohomology_dims
from laq.liealg.catalog import heisenberg, sl2
from laq.shared.data_types import IdentityViolation
from laq.shared.errors import ActionNotCompatible, NotValidated, WindowTooSmall
from laq.utils.config import load_settings


@pytest.fixture
def sl2_complex(trivial_sl2):
    return assemble(trivial_sl2, 3, 3)


def test_block_dims_follow_exterior_powers(sl2_complex):
    assert sl2_complex.dims_grid() == [[1] * 4, [3] * 4, [3] * 4, [1] * 4]
    assert total_dims(sl2_complex, 2) == [1, 3, 3]


def test_groupoid_rows_count_composable_tuples():
    c = assemble(trivial_groupoid(cyclic_group(2)), 0, 3)
    assert c.dims_grid() == [[1, 2, 4, 8]]


def test_delta_alternates_on_trivial_algebroid(sl2_complex):
    for p in range(4):
        for q in range(1, 4):
            block = sl2_complex.delta[(p, q)]
            if q % 2:
                assert block.is_zero()
            else:
                assert block == SparseMatrix.identity(block.cols)


def test_trivial_algebroid_collapses_to_ce(named_algebra):
    name, algebra = named_algebra
    c = assemble(trivial_algebroid(point_bundle(algebra)), 4, 4)
    dims = total_cohomology(c, 3).dims
    assert dims == EXPECTED_CE[name]
    assert dims == ce_cohomology_dims(algebra, 3)


@pytest.mark.parametrize("group", [cyclic_group(2), cyclic_group(3), symmetric_group(3)], ids=["Z/2", "Z/3", "S3"])
def test_finite_groups_have_trivial_rational_cohomology(group):
    dims = total_cohomology(assemble(trivial_groupoid(group), 3, 3), 2).dims
    assert dims == (1, 0, 0)
    assert dims == bar_cohomology_dims(group, 2)


def test_pair_groupoid_is_contractible():
    assert total_cohomology(assemble(pair_zero(["a", "b", "c"]), 4, 4), 3).dims == (1, 0, 0, 0)


@pytest.mark.parametrize(
    "build,window,degree,expected",
    [(equivariant_swap, (3, 3), 2, (1, 1, 0)), (equivariant_sl2, (4, 4), 3, (1, 0, 0, 1))],
    ids=["swap", "sl2"],
)
def test_equivariant_cohomology_is_invariant_ce(build, window, degree, expected):
    l = build()
    assert total_cohomology(assemble(l, *window), degree).dims == expected
    assert invariant_ce_dims(l, degree) == expected


def test_window_too_small(trivial_sl2):
    c = assemble(trivial_sl2, 2, 2)
    total_cohomology(c, 1)
    with pytest.raises(WindowTooSmall):
        total_cohomology(c, 2)


def test_negative_window_is_refused(trivial_sl2):
    with pytest.raises(WindowTooSmall):
        assemble(trivial_sl2, -1, 2)


def test_cohomology_is_stable_under_larger_windows():
    l = equivariant_swap()
    assert total_cohomology(assemble(l, 3, 3), 2).dims == total_cohomology(assemble(l, 4, 4), 2).dims


@pytest.mark.parametrize("name,mutated", multiplicative_mutations(), ids=[m[0] for m in multiplicative_mutations()])
def test_assemble_refuses_non_multiplicative_fields(name, mutated):
    with pytest.raises(NotValidated) as info:
        assemble(mutated, 2, 2)
    assert info.value.result is not None and not info.value.result.ok


def test_sign_flip_in_delta_is_caught(sl2_complex):
    assert verify_double_complex(sl2_complex).ok
    flipped = dataclasses.replace(
        sl2_complex, delta={**sl2_complex.delta, (1, 2): sl2_complex.delta[(1, 2)].scale(-1)}
    )
    verdict = verify_double_complex(flipped)
    assert not verdict.ok
    assert isinstance(verdict.failure, IdentityViolation)
    assert verdict.failure.check == "commutation"


def test_e1_masks_the_top_row(sl2_complex):
    page = e1_page(sl2_complex, "delta-first")
    assert page.column(0) == [1, 3, 3, 1]
    assert page.column(1) == [0, 0, 0, 0]
    assert page.value(0, 3) is None


def test_e2_masks_two_bands(sl2_complex):
    page = e2_page(sl2_complex, "delta-first")
    assert page.column(0) == [1, 0, 0, None]
    assert page.value(1, 3) is None
    assert page.nonzero_blocks() == [(0, 0)]


def test_psi_first_page_takes_ce_first(sl2_complex):
    page = e1_page(sl2_complex, "psi-first")
    for q in range(4):
        assert page.column(q) == [1, 0, 0, None]


def test_equivariant_e2_sits_on_the_bottom_row():
    page = e2_page(assemble(equivariant_swap(), 4, 4), "delta-first")
    assert page.column(0)[:3] == [1, 1, 0]
    assert all(q == 0 for _, q in page.nonzero_blocks())


def test_unknown_orientation(sl2_complex):
    with pytest.raises(ValueError):
        e1_page(sl2_complex, "sideways")


def test_thread_pool_gives_identical_blocks(monkeypatch):
    def build():
        return assemble(equivariant_swap(), 3, 3)

    serial = build()
    monkeypatch.setenv("LAQ_WORKERS", "4")
    load_settings.cache_clear()
    assert load_settings().workers == 4
    parallel = build()
    assert parallel.delta == serial.delta
    assert parallel.psi == serial.psi
    assert parallel.labels == serial.labels
    assert e2_page(parallel) == e2_page(serial)


def test_invariant_forms_of_swap():
    l = equivariant_swap()
    assert [invariant_forms(l, p).dim for p in range(3)] == [1, 1, 0]


def test_invariant_subcomplex_of_swap():
    l = equivariant_swap()
    c = assemble(l, 3, 3)
    inv = invariant_subcomplex(c, groupoid_cochain_action(l, c.window))
    assert [inv.dim(p, 0) for p in range(3)] == [1, 1, 0]
    assert total_cohomology(inv, 2).dims == (1, 1, 0)


def test_invariant_cochains_split_as_tensor_product():
    assert check_invariant_splitting().ok


def test_cochain_action_needs_one_object():
    with pytest.raises(ActionNotCompatible):
        groupoid_cochain_action(pair_zero(["a", "b"]), (1, 1))


def test_invariant_subcomplex_over_a_nonabelian_group():
    l = matched_pair_permutations(3)
    c = assemble(l, 2, 2)
    inv = invariant_subcomplex(c, groupoid_cochain_action(l, c.window))
    assert [invariant_forms(l, p).dim for p in range(4)] == [1, 1, 0, 0]
    assert inv.dims_grid() == [[1, 6, 36], [1, 6, 36], [0, 0, 0]]
    assert total_cohomology(inv, 1).dims == (1, 1)
    assert total_cohomology(c, 1).dims == (1, 1)


def test_heisenberg_under_an_involution():
    l = matched_pair_z2(heisenberg(), HEISENBERG_INVOLUTION)
    assert [invariant_forms(l, p).dim for p in range(4)] == [1, 1, 1, 1]
    assert invariant_ce_dims(l, 2) == (1, 1, 1)
    c = assemble(l, 3, 3)
    assert total_cohomology(c, 2).dims == (1, 1, 1)
    assert total_cohomology(invariant_subcomplex(c, groupoid_cochain_action(l, c.window)), 2).dims == (1, 1, 1)


def test_fixed_vectors_that_are_not_a_subcomplex_are_refused():
    c = assemble(trivial_algebroid(point_bundle(sl2())), 2, 2)
    action = {block: [SparseMatrix.identity(c.dim(*block))] for block in c.blocks()}
    action[(1, 2)] = [SparseMatrix.identity(3).scale(-1)]
    with pytest.raises(ActionNotCompatible) as info:
        invariant_subcomplex(c, action)
    assert info.value.witness["block"] == (1, 2)
    assert info.value.witness["differential"] == "delta"
