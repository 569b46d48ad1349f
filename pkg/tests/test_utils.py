# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.linalg import RATIONALS
from cychom.utils import cached_property, cyclic_sign, sparse_add, sparse_items, sparse_scale, sparse_tensor, u

Q = RATIONALS


def test_u():
    assert u(b'd0 \xe2\x8a\x97 d1') == 'd0 ⊗ d1'
    assert u('x') == 'x'
    assert u(3) == '3'


def test_sparse_add_in_place_drops_zeros():
    target = {0: Q(1), 1: Q(2)}
    result = sparse_add(target, {1: Q(-2), 2: Q(1)})
    assert result is target
    assert target == {0: Q(1), 2: Q(1)}
    sparse_add(target, {0: Q(1)}, Q(-1))
    assert target == {2: Q(1)}


def test_sparse_scale_and_items():
    assert sparse_scale({0: Q(2)}, Q(0)) == {}
    assert sparse_scale({0: Q(2)}, Q(3)) == {0: Q(6)}
    assert sparse_items({2: Q(1), 0: Q(3)}) == [(0, Q(3)), (2, Q(1))]


@pytest.mark.parametrize(['n', 'sign'], ((0, 1), (1, -1), (2, 1), (5, -1)))
def test_cyclic_sign(n, sign):
    assert cyclic_sign(n) == sign


def test_sparse_tensor():
    assert sparse_tensor([{0: Q(1), 1: Q(2)}, {3: Q(1)}]) == {(0, 3): Q(1), (1, 3): Q(2)}
    assert sparse_tensor([{0: Q(1)}, {}]) == {}
    assert sparse_tensor([{1: Q(2)}]) == {(1,): Q(2)}


def test_cached_property():
    calls = []

    class Thing(object):
        @cached_property
        def value(self):
            calls.append(1)
            return 42

    thing = Thing()
    assert thing.value == 42
    assert thing.value == 42
    assert len(calls) == 1
