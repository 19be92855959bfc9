import random
from fractions import Fraction

import pytest

from laq.exactla import (
    SparseMatrix,
    Subspace,
    block_matrix,
    contains,
    hstack,
    image,
    intersect,
    kernel,
    kron,
    preimage,
    rank,
    solve,
    span,
    subquotient_dim,
    subspace_sum,
    to_rational,
    vstack,
)
from laq.shared.errors import AmbientMismatch, ContainmentViolation


def m(rows):
    return SparseMatrix.from_dense(rows)


def test_rationals_parse_from_strings_and_reject_zero_denominators():
    assert to_rational("-3/6") == Fraction(-1, 2)
    assert to_rational(" 7 ") == 7
    with pytest.raises(ZeroDivisionError):
        to_rational("1/0")
    with pytest.raises(TypeError):
        to_rational(True)


def test_sparse_matrix_drops_zeros_and_checks_bounds():
    a = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): "1/2"})
    assert a.nnz == 1
    assert a.get(1, 1) == Fraction(1, 2)
    with pytest.raises(ValueError):
        SparseMatrix(1, 1, {(1, 0): 1})


def test_arithmetic_matches_hand_computation():
    a = m([[1, 2], [3, 4]])
    b = m([[0, 1], [1, 0]])
    assert a @ b == m([[2, 1], [4, 3]])
    assert a + b == m([[1, 3], [4, 4]])
    assert a - a == SparseMatrix.zeros(2, 2)
    assert a.T == m([[1, 3], [2, 4]])
    assert a.apply([1, -1]) == [-1, -1]
    with pytest.raises(ValueError):
        a @ SparseMatrix.zeros(3, 1)


def test_rank_of_dependent_rows():
    assert rank(m([[1, 2], [2, 4]])) == 1
    assert rank(SparseMatrix.zeros(3, 4)) == 0
    assert rank(SparseMatrix.identity(5)) == 5


def test_kernel_vectors_are_annihilated():
    a = m([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    ker = kernel(a)
    assert ker.dim == 3 - rank(a)
    assert (a @ ker.matrix()).is_zero()


def test_kernel_of_a_row_vector():
    ker = kernel(m([[1, 2]]))
    assert ker.dim == 1
    assert contains(ker, SparseMatrix.from_columns([[-2, 1]], 2))


def test_image_and_span_agree():
    a = m([[1, 1], [0, 0], [1, 1]])
    assert image(a).dim == 1
    assert span(a) == image(a)


def test_solve_returns_coordinates_and_names_the_stray_column():
    basis = Subspace(3, ((1, 0, 0), (0, 1, 1)))
    coordinates = solve(basis, SparseMatrix.from_columns([[2, 3, 3]], 3))
    assert coordinates == SparseMatrix.from_columns([[2, 3]], 2)
    with pytest.raises(ContainmentViolation) as excinfo:
        solve(basis, SparseMatrix.from_columns([[1, 0, 0], [0, 0, 1]], 3))
    assert excinfo.value.witness == {"column": 1}


def test_subspace_operations():
    x = Subspace(3, ((1, 0, 0), (0, 1, 0)))
    y = Subspace(3, ((0, 1, 0), (0, 0, 1)))
    assert intersect(x, y).dim == 1
    assert subspace_sum(x, y).dim == 3
    assert subquotient_dim(subspace_sum(x, y), x) == 1
    with pytest.raises(ContainmentViolation):
        subquotient_dim(x, y)
    with pytest.raises(AmbientMismatch):
        intersect(x, Subspace.full(2))


def test_preimage_of_a_line():
    projection = m([[1, 0, 0], [0, 1, 0]])
    line = Subspace(2, ((1, 0),))
    pre = preimage(projection, line)
    assert pre.dim == 2
    assert contains(pre, SparseMatrix.from_columns([[5, 0, 7]], 3))


def test_dependent_basis_is_refused():
    with pytest.raises(ValueError):
        Subspace(2, ((1, 1), (2, 2)))


def test_block_assembly():
    a = SparseMatrix.identity(2)
    b = m([[5]])
    assembled = block_matrix([2, 1], [2, 1], {(0, 0): a, (1, 1): b})
    assert assembled == m([[1, 0, 0], [0, 1, 0], [0, 0, 5]])
    assert hstack(a, SparseMatrix.zeros(2, 1)).shape == (2, 3)
    assert vstack(a, SparseMatrix.zeros(1, 2)).shape == (3, 2)
    with pytest.raises(ValueError):
        block_matrix([1], [1], {(0, 0): a})


def test_kron_orders_rows_outer_major():
    a = m([[1, 2]])
    b = m([[0, 1], [1, 0]])
    assert kron(a, b) == m([[0, 1, 0, 2], [1, 0, 2, 0]])
    assert kron(SparseMatrix.identity(2), SparseMatrix.identity(3)) == SparseMatrix.identity(6)


def test_column_slice():
    a = m([[1, 2, 3], [4, 5, 6]])
    assert a.column_slice(1, 3) == m([[2, 3], [5, 6]])


@pytest.mark.parametrize("seed", range(8))
def test_rank_equals_rank_of_transpose(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 7), rng.randint(1, 7)
    a = SparseMatrix(
        rows,
        cols,
        {(i, j): Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for i in range(rows) for j in range(cols) if rng.random() < 0.4},
    )
    assert rank(a) == rank(a.T)
    assert kernel(a).dim + rank(a) == cols


def test_subspaces_compare_by_span():
    assert Subspace(2, ((1, 1), (1, -1))) == Subspace.full(2)
    assert Subspace(3, ((2, 0, 2),)) == Subspace(3, ((1, 0, 1),))
    assert Subspace(3, ((1, 0, 1),)) != Subspace(3, ((1, 0, 0),))
    assert Subspace(3, ((1, 0, 0),)) != Subspace(3, ((1, 0, 0), (0, 1, 0)))
    assert Subspace.zero(2) != Subspace.zero(3)
