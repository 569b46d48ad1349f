# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.linalg import RATIONALS
from cychom.structures import (check_algebra, dual_numbers, ground_field, matrix_algebra, matrix_element, opposite,
                               product_algebra, square_zero, tensor_algebra, triangular_algebra)
from cychom.structures.errors import NonAssociativeError, UnitError

from tests.test_structures.mock import left_unital_algebra, non_associative_algebra

Q = RATIONALS
one = Q.one


def test_non_associative_rejected():
    with pytest.raises(NonAssociativeError):
        non_associative_algebra()
    report = check_algebra(non_associative_algebra(validate=False))
    assert not report.passed
    assert report.get('associativity').witness == ('a', 'a', 'a')


def test_declared_unit_checked():
    k2 = product_algebra(2, Q)
    with pytest.raises(UnitError):
        type(k2)(k2.space, k2.mult, left_unit={0: one})


@pytest.mark.parametrize(
    ['algebra', 'unit'],
    (
            (ground_field(Q), {0: one}),
            (product_algebra(3, Q), {0: one, 1: one, 2: one}),
            (dual_numbers(Q), {0: one}),
            (square_zero(2, Q), None),
    )
)
def test_unit_detection(algebra, unit):
    assert algebra.unit == unit
    assert check_algebra(algebra).data['unital'] is (unit is not None)


def test_left_unit_without_right_unit():
    algebra = left_unital_algebra()
    assert algebra.unit is None
    assert algebra.right_unit is None
    assert algebra.left_unit == {0: one}
    report = check_algebra(algebra)
    assert report.passed
    assert report.data['left_unital'] and not report.data['right_unital']


def test_matrix_algebra():
    m = matrix_algebra(ground_field(Q), 2)
    assert m.dim == 4
    assert m.labels[1] == 'E12(1)'
    assert m.unit == {0: one, 3: one}
    e12 = matrix_element(ground_field(Q), 2, {(0, 1): {0: one}})
    e21 = matrix_element(ground_field(Q), 2, {(1, 0): {0: one}})
    assert m.multiply(e12, e21) == {0: one}
    assert m.multiply(e21, e12) == {3: one}
    assert m.multiply(e12, e12) == {}
    assert not m.is_commutative()


def test_matrix_algebra_over_k2():
    m = matrix_algebra(product_algebra(2, Q), 2)
    assert m.dim == 8
    assert m.unit == {0: one, 1: one, 6: one, 7: one}
    assert check_algebra(m).passed


def test_tensor_and_opposite():
    t = tensor_algebra(product_algebra(2, Q), dual_numbers(Q))
    assert t.dim == 4
    assert t.labels[1] == 'e0*x'
    assert t.unit == {0: one, 2: one}
    assert check_algebra(t).passed
    m = matrix_algebra(ground_field(Q), 2)
    op = opposite(m)
    assert op.multiply({1: one}, {2: one}) == m.multiply({2: one}, {1: one})


def test_triangular_algebra():
    # [[k², k], [0, k]] with k² acting on the corner through e0
    t = triangular_algebra(product_algebra(2, Q), 1, {(0, 0): {0: one}})
    assert t.dim == 4
    assert t.unit == {0: one, 1: one, 3: one}
    assert check_algebra(t).passed
    assert t.multiply({0: one}, {2: one}) == {2: one}
    assert t.multiply({2: one}, {3: one}) == {2: one}
    assert t.multiply({2: one}, {0: one}) == {}


def test_power_and_format():
    d = dual_numbers(Q)
    x = {0: one, 1: one}
    assert d.power(x, 3) == {0: one, 1: Q(3)}
    assert d.format(d.power(x, 2)) == '1 + 2*x'
