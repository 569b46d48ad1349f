# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from six.moves import range

from cychom.linalg import RATIONALS, Field, Quotient, SparseMat, Subspace, inverse, kernel_basis, rank, solve_affine
from cychom.linalg.errors import NotInSubspaceError, SingularMatrixError

Q = RATIONALS


@st.composite
def small_matrices(draw, max_size=4):
    m, n = draw(st.integers(1, max_size)), draw(st.integers(1, max_size))
    rows = draw(st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=m, max_size=m))
    return SparseMat.from_dense(rows, Q)


@pytest.mark.parametrize(
    ['rows', 'expected'],
    (
            ([[1, 2], [2, 4]], 1),
            ([[1, 0], [0, 1]], 2),
            ([[0, 0], [0, 0]], 0),
            ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 2),
    )
)
def test_rank(rows, expected):
    assert rank(SparseMat.from_dense(rows, Q)) == expected


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert rank(SparseMat.from_dense(rows, Q)) == 2
    assert rank(SparseMat.from_dense(rows, Field(2))) == 1


def test_kernel_free_column_normal_form():
    m = SparseMat.from_dense([[1, 1, 0, 2], [0, 0, 1, -1]], Q)
    basis, free = kernel_basis(m, with_free=True)
    assert free == [1, 3]
    for k, vector in enumerate(basis):
        assert m.apply(vector) == {}
        assert {j: vector.get(j, Q.zero) for j in free} == {free[k]: Q.one, free[1 - k]: Q.zero}


@settings(derandomize=True, deadline=None)
@given(small_matrices())
def test_rank_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == m.ncols


def test_solve_affine():
    m = SparseMat.from_dense([[1, 1], [1, -1]], Q)
    particular, kernel = solve_affine(m, {0: Q(2), 1: Q(0)})
    assert particular == {0: Q(1), 1: Q(1)}
    assert kernel == []


def test_solve_affine_inconsistent():
    m = SparseMat.from_dense([[1, 1], [2, 2]], Q)
    assert solve_affine(m, {0: Q(1), 1: Q(3)}) is None
    particular, kernel = solve_affine(m, {0: Q(1), 1: Q(2)})
    assert m.apply(particular) == {0: Q(1), 1: Q(2)}
    assert len(kernel) == 1


@settings(derandomize=True, deadline=None, max_examples=20)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4))
def test_inverse(entries):
    n = len(entries)
    lower = SparseMat({i: dict([(j, Q(entries[i][j])) for j in range(i)] + [(i, Q.one)]) for i in range(n)},
                      (n, n), Q)
    assert lower * inverse(lower) == SparseMat.identity(n, Q)


def test_inverse_of_singular():
    with pytest.raises(SingularMatrixError):
        inverse(SparseMat.from_dense([[1, 2], [2, 4]], Q))


def test_subspace_coordinates():
    space = Subspace.kernel(SparseMat.from_dense([[1, -1, 0]], Q))
    assert space.dim == 2
    vector = {0: Q(2), 1: Q(2), 2: Q(5)}
    coords = space.coordinates(vector)
    assert space.embed(coords) == vector
    assert space.contains(vector)
    assert not space.contains({0: Q(1)})
    with pytest.raises(NotInSubspaceError):
        space.coordinates({0: Q(1)})


def test_quotient():
    quotient = Quotient([{0: Q(1), 1: Q(-1)}], 3, Q)
    assert quotient.dim == 2
    assert quotient.relation_rank == 1
    assert quotient.coordinates({0: Q(1)}) == quotient.coordinates({1: Q(1)})
    assert quotient.reduce({0: Q(1), 1: Q(-1)}) == {}
    assert quotient.projection_matrix().shape == (2, 3)
