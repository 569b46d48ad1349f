# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.linalg import RATIONALS, Field
from cychom.tensors import BasedSpace, MixedRadix
from cychom.tensors.errors import IndexOutOfRangeError

Q = RATIONALS


@pytest.fixture(scope='module')
def space():
    return BasedSpace(['x', 'y', 'z'], Q)


def test_labels(space):
    assert space.dim == 3
    assert space.index('y') == 1
    assert space.has_label('z')
    assert not space.has_label('w')
    assert BasedSpace.numbered('e', 2, Q).labels == ('e0', 'e1')


def test_unique_labels():
    with pytest.raises(ValueError):
        BasedSpace(['x', 'x'], Q)


@pytest.mark.parametrize(
    ['vector', 'text'],
    (
            ({}, '0'),
            ({0: Q(1)}, 'x'),
            ({0: Q(-1), 2: Q(1)}, '-x + z'),
            ({1: Q('1/2'), 2: Q(-3)}, '1/2*y - 3*z'),
    )
)
def test_format(space, vector, text):
    assert space.format(vector) == text


def test_spaces_compare_by_labels_and_field(space):
    assert space == BasedSpace(['x', 'y', 'z'], Q)
    assert space != BasedSpace(['x', 'y', 'z'], Field(3))
    assert space != BasedSpace(['x', 'y'], Q)


@pytest.mark.parametrize(
    ['key', 'code'],
    (
            ((0, 0, 0), 0),
            ((0, 0, 1), 1),
            ((0, 1, 0), 4),
            ((1, 0, 0), 12),
            ((1, 2, 3), 23),
    )
)
def test_mixed_radix(key, code):
    radix = MixedRadix((2, 3, 4))
    assert radix.size == 24
    assert radix.encode(key) == code
    assert radix.decode(code) == key


def test_mixed_radix_out_of_range():
    radix = MixedRadix((2, 2))
    with pytest.raises(IndexOutOfRangeError):
        radix.encode((0, 2))
    with pytest.raises(IndexOutOfRangeError):
        radix.encode((0,))
    with pytest.raises(IndexOutOfRangeError):
        radix.decode(4)
    assert list(radix.keys()) == [(0, 0), (0, 1), (1, 0), (1, 1)]
