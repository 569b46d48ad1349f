# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cychom.linalg import RATIONALS
from cychom.rowext import (certify_epsilon_equivalence, epsilon_chain_map, epsilon_tensor, kernel_contraction,
                           line_extension, normalize_cocycle, random_augmented_module, row_extension)
from cychom.rowext.errors import NotNormalizedError, UnitaryModuleError

Q = RATIONALS
one = Q.one


@pytest.fixture(scope='module')
def line():
    return row_extension(*line_extension(Q))


def test_kernel_contraction_homotopy(line):
    contraction = kernel_contraction(line)
    assert contraction.last_ideal_position((1, 0, 1)) == 1
    assert not contraction.in_kernel((1, 1))
    assert contraction.homotopy((0,)) == {(0, 1): -one}
    assert contraction.homotopy((1, 0)) == {(1, 0, 1): one}
    assert contraction.homotopy((1, 1)) == {}
    assert contraction.check(3).passed


def test_kernel_contraction_preconditions():
    twisted = row_extension(*line_extension(Q, twisted=True))
    with pytest.raises(UnitaryModuleError):
        kernel_contraction(twisted)
    normalized, _, _ = normalize_cocycle(twisted)
    with pytest.raises(UnitaryModuleError):
        kernel_contraction(normalized)


def test_not_normalized():
    rng = Random(0)
    for _ in range(50):
        re = row_extension(*random_augmented_module(rng, Q))
        if not re.is_normalized():
            break
    else:
        pytest.skip('no sample with a nonzero cocycle')
    with pytest.raises(NotNormalizedError):
        kernel_contraction(re)


def test_epsilon_tensor(line):
    assert epsilon_tensor(line, (1, 1)) == {(0, 0): one}
    assert epsilon_tensor(line, (1, 0)) == {}


@pytest.mark.parametrize('mode', ('full', 'cc1', 'bar'))
def test_epsilon_chain_map(line, mode):
    _, report = epsilon_chain_map(line, mode, max_degree=2)
    assert report.passed


def test_line_equivalence(line):
    report = certify_epsilon_equivalence(line, max_degree=3, cyclic_degree=3)
    assert report.passed
    assert report.data['dims'] == {'HH(M)': [1, 0, 0, 0], 'HH(B)': [1, 0, 0, 0],
                                   'HC(M)': [1, 0, 1, 0], 'HC(B)': [1, 0, 1, 0]}


@settings(derandomize=True, deadline=None, max_examples=20)
@given(st.randoms(use_true_random=False))
def test_random_equivalence(rng):
    am, sigma = random_augmented_module(rng, Q)
    report = certify_epsilon_equivalence(row_extension(am, sigma), max_degree=2, cyclic_degree=2)
    assert report.passed, report.failures
