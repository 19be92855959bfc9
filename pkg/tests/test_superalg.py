import random
from fractions import Fraction
from math import comb

import pytest

from laq.exactla import SparseMatrix
from laq.liealg import LieAlgebra, ce_derivation
from laq.liealg.catalog import heisenberg, sl2
from laq.shared.errors import DegreeMismatch, FrameMismatch
from laq.superalg import (
    DerivationSpec,
    Element,
    ExteriorFrame,
    apply_derivation,
    bracket,
    derivation_matrix,
    evaluate,
    exterior_basis,
    exterior_power_transpose,
    is_homological,
    monomial_label,
    pullback,
    wedge,
    wedge_all,
)

FRAME = ExteriorFrame(3)


def xi(k, frame=FRAME):
    return Element.generator(frame, k)


def test_basis_is_lexicographic_and_has_binomial_size():
    assert exterior_basis(3, 2) == [(0, 1), (0, 2), (1, 2)]
    assert [len(exterior_basis(4, p)) for p in range(5)] == [comb(4, p) for p in range(5)]
    assert exterior_basis(2, 3) == []


def test_wedge_signs_follow_inversions():
    assert wedge(xi(1), xi(0)) == -wedge(xi(0), xi(1))
    assert wedge(xi(0), xi(0)).is_zero()
    assert wedge_all(FRAME, [xi(2), xi(0), xi(1)]) == Element(FRAME, {(0, 1, 2): 1})
    assert wedge(xi(0), xi(1)).degree == 2


def test_wedge_refuses_mixed_frames():
    with pytest.raises(FrameMismatch):
        wedge(xi(0), xi(0, ExteriorFrame(2)))


def test_monomials_must_be_increasing():
    with pytest.raises(ValueError):
        Element(FRAME, {(1, 0): 1})


def test_inhomogeneous_elements_have_no_degree():
    x = Element.one(FRAME) + xi(0)
    assert x.degree is None
    assert x.homogeneous(1) == xi(0)
    assert evaluate(x.scale(3)) == 3
    assert str(Element.zero(FRAME)) == "0"
    assert monomial_label(()) == "1"


def test_leibniz_rule_on_a_product():
    frame = ExteriorFrame(2)
    d = DerivationSpec(frame, 1, (wedge(xi(0, frame), xi(1, frame)), Element.zero(frame)))
    assert apply_derivation(d, wedge(xi(0, frame), xi(1, frame))).is_zero()
    assert apply_derivation(d, xi(0, frame)) == Element(frame, {(0, 1): 1})


def test_derivation_images_must_have_the_right_degree():
    with pytest.raises(ValueError):
        DerivationSpec(FRAME, 1, (xi(0), Element.zero(FRAME), Element.zero(FRAME)))


def test_bracket_of_an_odd_derivation_with_itself_is_twice_its_square():
    d = ce_derivation(sl2())
    twice_square = bracket(d, d)
    assert twice_square.degree == 2
    assert twice_square.is_zero()


def test_ce_field_of_a_lie_algebra_is_homological():
    assert is_homological(ce_derivation(sl2())).ok


def test_jacobi_failure_breaks_d_squared():
    broken = LieAlgebra.from_brackets(3, [(0, 1, 0, 1), (1, 2, 1, 1)])
    verdict = is_homological(ce_derivation(broken))
    assert not verdict.ok
    assert verdict.failure.check == "homological"
    assert not verdict.failure.witness["residue"].is_zero()


def test_homological_needs_degree_one():
    with pytest.raises(DegreeMismatch):
        is_homological(DerivationSpec.zero(FRAME, degree=0))


def test_derivation_matrix_shape_and_square():
    d = ce_derivation(sl2())
    d1, d2 = derivation_matrix(d, 1), derivation_matrix(d, 2)
    assert d1.shape == (3, 3)
    assert (d2 @ d1).is_zero()


def test_pullback_along_a_sum_map():
    frame = ExteriorFrame(1)
    pulled = pullback(SparseMatrix.from_dense([[1, 1]]), Element.generator(frame, 0))
    assert pulled == Element(ExteriorFrame(2), {(0,): 1, (1,): 1})
    with pytest.raises(FrameMismatch):
        pullback(SparseMatrix.identity(2), xi(0))


def test_exterior_power_of_a_swap():
    swap = SparseMatrix.from_dense([[0, 1], [1, 0]])
    assert exterior_power_transpose(swap, 1) == swap
    assert exterior_power_transpose(swap, 2) == SparseMatrix.from_dense([[-1]])
    assert exterior_power_transpose(swap, 0) == SparseMatrix.identity(1)
    assert exterior_power_transpose(swap, 2).get(0, 0) == Fraction(-1)


def monomials(frame):
    return [
        Element(frame, {m: 1})
        for p in range(frame.generator_count + 1)
        for m in frame.basis(p)
    ]


def random_derivation(rng, n):
    frame = ExteriorFrame(n)
    density = rng.choice((0.2, 0.7))
    images = tuple(
        Element(frame, {m: rng.randint(-2, 2) for m in frame.basis(2) if rng.random() < density})
        for _ in range(n)
    )
    return DerivationSpec(frame, 1, images)


def derivations_up_to_four():
    rng = random.Random(11)
    drawn = [random_derivation(rng, n) for n in range(1, 5) for _ in range(6)]
    return drawn + [
        DerivationSpec.zero(ExteriorFrame(4)),
        ce_derivation(sl2()),
        ce_derivation(heisenberg()),
        ce_derivation(LieAlgebra.from_brackets(3, [(0, 1, 0, 1), (1, 2, 1, 1)])),
    ]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_wedge_is_associative_and_graded_commutative(n):
    basis = monomials(ExteriorFrame(n))
    for a in basis:
        for b in basis:
            sign = -1 if (a.degree * b.degree) % 2 else 1
            assert wedge(a, b) == wedge(b, a).scale(sign)
            for c in basis:
                assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_leibniz_rule_on_every_pair_of_monomials():
    for d in derivations_up_to_four():
        basis = monomials(d.frame)
        for a in basis:
            for b in basis:
                sign = -1 if a.degree % 2 else 1
                expected = wedge(apply_derivation(d, a), b) + wedge(a, apply_derivation(d, b)).scale(sign)
                assert apply_derivation(d, wedge(a, b)) == expected


def test_homological_check_matches_d_squared_on_every_monomial():
    seen = set()
    for d in derivations_up_to_four():
        squares_to_zero = all(apply_derivation(d, apply_derivation(d, x)).is_zero() for x in monomials(d.frame))
        assert is_homological(d).ok == squares_to_zero
        assert bracket(d, d).is_zero() == is_homological(d).ok
        seen.add(squares_to_zero)
    assert seen == {True, False}


def test_homological_field_on_three_generators():
    d = DerivationSpec(FRAME, 1, (Element.zero(FRAME), Element.zero(FRAME), wedge(xi(0), xi(1))))
    assert is_homological(d).ok


def test_non_homological_field_reports_its_residue():
    d = DerivationSpec(
        FRAME,
        1,
        (wedge(xi(0), xi(1)).scale(-1), wedge(xi(1), xi(2)).scale(-1), Element.zero(FRAME)),
    )
    verdict = is_homological(d)
    assert not verdict.ok
    assert verdict.failure.witness["generator"] == 0
    assert verdict.failure.witness["residue"] == Element(FRAME, {(0, 1, 2): -1})
