# -*- coding: utf-8 -*-
import itertools
import random

import pytest
from sympy import Matrix, igcd

from chaospu.exceptions import InvalidInput
from chaospu.intlinalg import AbelianGroup, IntegerSolver, SparseIntMatrix, \
    cokernel_generators, cokernel_invariants, invariant_factors_of, \
    kernel_basis, smith_normal_form, solve_integer


def _diagonal(rows, cols, factors):
    return [[factors[i] if i == j and i < len(factors) else 0
             for j in range(cols)] for i in range(rows)]


def test_smith_normal_form_of_classic_example():
    matrix = SparseIntMatrix.from_dense(
        [[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    form = smith_normal_form(matrix)
    assert form.factors == (2, 6, 12)
    assert form.rank == 3


def test_transforms_diagonalize():
    matrix = SparseIntMatrix.from_dense(
        [[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    form = smith_normal_form(matrix, transforms=True)
    product = form.U @ matrix @ form.V
    assert product.to_dense() == _diagonal(3, 3, form.factors)
    identity = form.V @ form.V_inverse
    assert identity.to_dense() == _diagonal(3, 3, (1, 1, 1))


def test_diagonal_without_divisibility_is_fixed_by_gcd_moves():
    matrix = SparseIntMatrix.from_dense([[4, 0], [0, 6]])
    form = smith_normal_form(matrix, transforms=True)
    assert form.factors == (2, 12)
    product = form.U @ matrix @ form.V
    assert product.to_dense() == _diagonal(2, 2, (2, 12))
    identity = form.V @ form.V_inverse
    assert identity.to_dense() == _diagonal(2, 2, (1, 1))


def test_invariant_factors_match_gcds_of_minors():
    rng = random.Random(7)
    for _ in range(5):
        dense = [[rng.randint(-4, 4) for _ in range(4)] for _ in range(3)]
        form = smith_normal_form(SparseIntMatrix.from_dense(dense))
        product = 1
        for k in range(1, form.rank + 1):
            product *= form.factors[k - 1]
            g = 0
            for rows in itertools.combinations(range(3), k):
                for cols in itertools.combinations(range(4), k):
                    minor = Matrix([[dense[i][j] for j in cols]
                                    for i in rows]).det()
                    g = igcd(g, int(minor))
            assert g == product


def test_zero_and_empty_matrices():
    assert smith_normal_form(SparseIntMatrix(3, 2)).rank == 0
    assert cokernel_invariants(SparseIntMatrix(0, 2)) == AbelianGroup(2)
    assert cokernel_invariants(SparseIntMatrix(2, 0)) == AbelianGroup(0)


def test_cokernel_invariants():
    assert cokernel_invariants(SparseIntMatrix.from_dense(
        [[2, 0], [0, 3]])) == AbelianGroup(0, (6,))
    assert cokernel_invariants(SparseIntMatrix.from_dense(
        [[2, 4]])) == AbelianGroup(1, (2,))


def test_abelian_group_canonical_form():
    group = AbelianGroup.from_orders(1, [2, 3, 4])
    assert group.torsion == (2, 12)
    assert str(group) == "Z+Z/2+Z/12"
    assert group.elementary_divisors(2) == (2, 4)
    assert group.primary_part(3) == AbelianGroup(0, (3,))
    assert group.order_of_torsion == 24
    assert group.to_json() == {"free_rank": 1, "torsion": ["2", "12"]}
    assert str(AbelianGroup(0)) == "0"
    assert AbelianGroup(0).is_trivial()
    assert AbelianGroup(2, (2,)) + AbelianGroup(0, (3,)) == \
        AbelianGroup(2, (6,))


def test_invariant_factors_refuse_zero():
    assert invariant_factors_of([4, 6, 1]) == (2, 12)
    with pytest.raises(InvalidInput):
        invariant_factors_of([0])


def test_solve_integer():
    matrix = SparseIntMatrix.from_dense([[2, 0], [0, 3]])
    assert solve_integer(matrix, [4, 3]) == [2, 1]
    assert solve_integer(matrix, [1, 0]) is None

    solver = IntegerSolver(SparseIntMatrix.from_dense([[1, 1], [2, 2]]))
    solution = solver.solve([3, 6])
    assert solution is not None
    assert solver.matrix.apply(solution) == [3, 6]
    assert solver.solve([3, 5]) is None
    with pytest.raises(InvalidInput):
        solver.solve([1])


def test_kernel_basis():
    matrix = SparseIntMatrix.from_dense([[1, 1, 0], [0, 0, 0]])
    basis = kernel_basis(matrix)
    assert len(basis) == 2
    for vector in basis:
        assert matrix.apply(vector) == [0, 0]
        assert next(v for v in vector if v) > 0


def test_cokernel_generators_orders():
    matrix = SparseIntMatrix.from_dense([[2, 0], [0, 0]])
    orders = sorted(order for order, _ in cokernel_generators(matrix))
    assert orders == [0, 2]


def test_sparse_matrix_basics():
    matrix = SparseIntMatrix.from_dense([[0, 5], [7, 0]])
    assert matrix.nnz == 2
    assert matrix.get(0, 1) == 5
    assert matrix.row(1) == {0: 7}
    assert matrix.column(1) == {0: 5}
    assert matrix.transpose().to_dense() == [[0, 7], [5, 0]]
    assert SparseIntMatrix.load(matrix.dump()) == matrix
    with pytest.raises(InvalidInput):
        SparseIntMatrix(1, 1, {(1, 1): 3})
    with pytest.raises(InvalidInput):
        SparseIntMatrix.load("# 2 2\n0 x 1")
