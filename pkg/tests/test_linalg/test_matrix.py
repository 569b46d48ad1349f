# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.linalg import RATIONALS, SparseMat
from cychom.linalg.errors import ShapeError

Q = RATIONALS


@pytest.fixture(scope='module')
def m():
    return SparseMat.from_dense([[1, 2, 0], [0, 0, '1/2']], Q)


def test_zero_entries_are_not_stored():
    a = SparseMat({0: {0: Q(0), 1: Q(3)}, 1: {}}, (2, 2), Q)
    assert a.nnz() == 1
    assert a.row(1) == {}
    assert a.first_entry() == (0, 1, Q(3))


def test_entries_out_of_shape():
    with pytest.raises(ShapeError):
        SparseMat({2: {0: Q(1)}}, (2, 2), Q)


def test_apply(m):
    assert m.apply({0: Q(1), 2: Q(4)}) == {0: Q(1), 1: Q(2)}
    assert m.apply({1: Q(0)}) == {}
    with pytest.raises(ShapeError):
        m.apply({3: Q(1)})


def test_compose_with_identity(m):
    assert SparseMat.identity(2, Q) * m == m
    assert m * SparseMat.identity(3, Q) == m
    with pytest.raises(ShapeError):
        m * m


def test_sum_and_difference(m):
    assert (m + m) == m.scale(2)
    assert (m - m).is_zero()
    assert (-m + m).is_zero()
    with pytest.raises(ShapeError):
        m + m.transpose()


def test_transpose_and_columns(m):
    t = m.transpose()
    assert t.shape == (3, 2)
    assert t.row(1) == {0: Q(2)}
    assert m.column(2) == {1: Q('1/2')}
    assert list(m.entries()) == [(0, 0, Q(1)), (0, 1, Q(2)), (1, 2, Q('1/2'))]


def test_restrictions(m):
    assert m.restrict_rows([1]).shape == (1, 3)
    assert m.restrict_rows([1]).row(0) == {2: Q('1/2')}
    assert m.restrict_columns([1, 2]) == SparseMat.from_dense([[2, 0], [0, '1/2']], Q)


def test_block_diagonal():
    one = SparseMat.identity(1, Q)
    block = SparseMat.block_diagonal([one, one.scale(3)], Q)
    assert block == SparseMat.from_dense([[1, 0], [0, 3]], Q)
