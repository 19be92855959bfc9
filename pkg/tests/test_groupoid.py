from itertools import product as cartesian

import pytest

from laq.groupoid import (
    ComposableTuple,
    FiniteGroupoid,
    action_groupoid,
    check_face_degeneracy_identities,
    check_simplicial_identities,
    cyclic_group,
    degeneracy,
    face,
    identity_groupoid,
    nerve,
    pair_groupoid,
    product_groupoid,
    symmetric_group,
    validate_groupoid,
)
from laq.groupoid.catalog import by_name
from laq.shared.errors import ActionInvalid, EmptySet, IndexOutOfRange


def t(*components):
    return ComposableTuple(tuple(components))


def corrupted_z2():
    g = cyclic_group(2)
    return FiniteGroupoid(g.objects, g.arrows, g.src, g.tgt, {**g.mult, ("1", "1"): "1"}, g.unit, g.inv)


def swap_moves(points, swapped):
    moves = {(x, "0"): x for x in points}
    moves.update({(x, "1"): swapped[x] for x in points})
    return moves


@pytest.mark.parametrize(
    "groupoid",
    [
        cyclic_group(1),
        cyclic_group(4),
        symmetric_group(3),
        pair_groupoid(["a", "b", "c"]),
        identity_groupoid(["x", "y"]),
        product_groupoid(cyclic_group(2), pair_groupoid(["a", "b"])),
    ],
)
def test_catalog_groupoids_satisfy_the_axioms(groupoid):
    assert validate_groupoid(groupoid).ok


def test_corrupted_table_fails_the_inverse_law():
    verdict = validate_groupoid(corrupted_z2())
    assert not verdict.ok
    assert verdict.failure.check == "inverse"
    assert verdict.failure.witness["arrow"] == "1"


def test_products_of_undeclared_arrows_are_refused():
    g = cyclic_group(2)
    with pytest.raises(ValueError):
        FiniteGroupoid(g.objects, g.arrows, g.src, g.tgt, {**g.mult, ("1", "2"): "0"}, g.unit, g.inv)


def test_missing_product_is_a_composability_failure():
    g = cyclic_group(2)
    table = {key: value for key, value in g.mult.items() if key != ("1", "1")}
    verdict = validate_groupoid(FiniteGroupoid(g.objects, g.arrows, g.src, g.tgt, table, g.unit, g.inv))
    assert verdict.failure.check == "composability"


def test_labels_must_be_non_empty_strings():
    with pytest.raises(TypeError):
        FiniteGroupoid(("",), (), {}, {}, {}, {"": ""}, {})


def test_symmetric_group_composes_right_to_left():
    g = symmetric_group(3)
    assert g.compose("102", "021") == "120"
    assert g.inv["120"] == "201"
    assert g.unit["*"] == "012"


@pytest.mark.parametrize("order", [1, 2, 3])
def test_group_nerve_has_n_to_the_q_tuples(order):
    g = cyclic_group(order)
    assert [len(nerve(g, q)) for q in range(4)] == [1, order, order**2, order**3]


def test_pair_groupoid_nerve_has_two_to_the_q_plus_one_tuples():
    g = pair_groupoid(["1", "2"])
    assert [len(nerve(g, q)) for q in range(5)] == [2, 4, 8, 16, 32]


def test_nerve_is_lexicographic():
    g = cyclic_group(2)
    assert [x.components for x in nerve(g, 2)] == [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")]
    with pytest.raises(IndexOutOfRange):
        nerve(g, -1)


def test_faces_drop_or_multiply():
    g = cyclic_group(3)
    pair = t("1", "2")
    assert face(g, 2, 0, pair) == t("2")
    assert face(g, 2, 1, pair) == t("0")
    assert face(g, 2, 2, pair) == t("1")
    with pytest.raises(IndexOutOfRange):
        face(g, 2, 3, pair)


def test_level_one_faces_are_source_and_target():
    g = pair_groupoid(["a", "b"])
    assert face(g, 1, 0, t("b<-a")) == ComposableTuple.of_object("a")
    assert face(g, 1, 1, t("b<-a")) == ComposableTuple.of_object("b")


def test_degeneracies_insert_units():
    g = pair_groupoid(["a", "b"])
    assert degeneracy(g, 1, 0, t("b<-a")) == t("b<-b", "b<-a")
    assert degeneracy(g, 1, 1, t("b<-a")) == t("b<-a", "a<-a")
    assert degeneracy(g, 0, 0, ComposableTuple.of_object("a")) == t("a<-a")


@pytest.mark.parametrize("groupoid", [cyclic_group(2), cyclic_group(3), pair_groupoid(["1", "2", "3"])])
def test_simplicial_identities_hold_up_to_level_four(groupoid):
    assert check_simplicial_identities(groupoid, 4).ok
    assert check_face_degeneracy_identities(groupoid, 4).ok


def test_a_face_multiplying_at_zero_is_caught_on_a_pair_groupoid():
    def wrong_face(g, q, i, x):
        if q >= 2 and i == 0:
            c = x.components
            return ComposableTuple((g.compose(c[0], c[1]),) + c[2:])
        return face(g, q, i, x)

    verdict = check_simplicial_identities(pair_groupoid(["1", "2"]), 3, face_fn=wrong_face)
    assert not verdict.ok
    assert verdict.failure.check == "simplicial"


def test_action_groupoid_arrows_run_from_the_moved_point():
    g = action_groupoid(cyclic_group(2), ["a", "b"], swap_moves(["a", "b"], {"a": "b", "b": "a"}))
    assert validate_groupoid(g).ok
    assert g.src["(a,1)"] == "b"
    assert g.tgt["(a,1)"] == "a"
    assert g.compose("(a,1)", "(b,1)") == "(a,0)"


def test_action_groupoid_refuses_a_non_action():
    with pytest.raises(ActionInvalid):
        action_groupoid(cyclic_group(2), ["a", "b"], swap_moves(["a", "b"], {"a": "b", "b": "b"}))


def test_empty_constructions_are_refused():
    with pytest.raises(EmptySet):
        pair_groupoid([])
    with pytest.raises(EmptySet):
        cyclic_group(0)


def test_catalog_lookup():
    assert len(by_name("cyclic", order=5).arrows) == 5
    assert len(by_name("pair", points=["a", "b"]).arrows) == 4
    with pytest.raises(ValueError):
        by_name("free")


def group_axioms_hold(g):
    unit, table = g.unit[g.objects[0]], g.mult
    if any(table[(a, unit)] != a or table[(unit, a)] != a for a in g.arrows):
        return False
    if any(table[(a, g.inv[a])] != unit or table[(g.inv[a], a)] != unit for a in g.arrows):
        return False
    return all(table[(table[(a, b)], c)] == table[(a, table[(b, c)])] for a, b, c in cartesian(g.arrows, repeat=3))


@pytest.mark.parametrize(
    "group",
    [cyclic_group(n) for n in range(1, 7)] + [symmetric_group(3), product_groupoid(cyclic_group(2), cyclic_group(2))],
)
def test_group_validator_agrees_with_brute_force_axioms(group):
    assert validate_groupoid(group).ok
    assert group_axioms_hold(group)
    for key, value in group.mult.items():
        for other in group.arrows:
            if other == value:
                continue
            table = {**group.mult, key: other}
            mutated = FiniteGroupoid(group.objects, group.arrows, group.src, group.tgt, table, group.unit, group.inv)
            assert validate_groupoid(mutated).ok == group_axioms_hold(mutated)


@pytest.mark.parametrize(
    "groupoid",
    [cyclic_group(3), symmetric_group(3), pair_groupoid(["a", "b", "c"]), identity_groupoid(["x", "y"])],
)
def test_nerve_matches_brute_force_filtering(groupoid):
    assert len(nerve(groupoid, 0)) == len(groupoid.objects)
    for q in range(1, 4):
        expected = {
            c
            for c in cartesian(groupoid.arrows, repeat=q)
            if all(groupoid.composable(c[k], c[k + 1]) for k in range(q - 1))
        }
        tuples = nerve(groupoid, q)
        assert len(tuples) == len(expected)
        assert {x.components for x in tuples} == expected
