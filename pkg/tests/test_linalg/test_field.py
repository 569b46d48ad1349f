# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from fractions import Fraction

import pytest

from cychom.linalg import RATIONALS, Field, get_field
from cychom.linalg.errors import FieldError, ScalarError


@pytest.fixture(scope='module')
def f5():
    return Field(5)


@pytest.mark.parametrize(
    ['value', 'text'],
    (
            (3, '3'),
            ('-3/6', '-1/2'),
            (' 4/2 ', '2'),
            (Fraction(7, 3), '7/3'),
            ('0', '0'),
    )
)
def test_rationals_read_and_print(value, text):
    assert RATIONALS.to_str(RATIONALS(value)) == text


@pytest.mark.parametrize(
    ['value', 'text'],
    (
            (7, '2'),
            ('1/2', '3'),
            (-1, '4'),
            ('10', '0'),
    )
)
def test_prime_field_read_and_print(f5, value, text):
    assert f5.to_str(f5(value)) == text


@pytest.mark.parametrize('value', ('abc', '1/0', '0.5.1', True, 1.5))
def test_rationals_reject(value):
    with pytest.raises(ScalarError):
        RATIONALS(value)


def test_prime_field_rejects_denominator_divisible_by_p(f5):
    with pytest.raises(ScalarError):
        f5('1/10')


@pytest.mark.parametrize('characteristic', (-1, 1, 4, 9))
def test_non_prime_characteristic(characteristic):
    with pytest.raises(FieldError):
        Field(characteristic)


def test_arithmetic_is_exact():
    third = RATIONALS('1/3')
    assert third + third + third == RATIONALS.one
    assert RATIONALS.factorial(5) == RATIONALS(120)
    assert RATIONALS.factorial(0) == RATIONALS.one


def test_get_field():
    assert get_field() is RATIONALS
    assert get_field('Q').characteristic == 0
    assert get_field('Fp', 7) == Field(7)
    assert get_field('Fp', 7).name == 'F7'
    with pytest.raises(FieldError):
        get_field('Fp')
    with pytest.raises(FieldError):
        get_field('Fp', 8)
