# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cychom.homology import (ChainComplex, bar_contraction, conjugation_homotopy, hochschild_equivalence, invert,
                             kill_contractible, matrix_stability, random_invertible, random_split_sequence)
from cychom.homology.errors import NoLeftUnitError, NotInvertibleError, PreconditionError
from cychom.linalg import RATIONALS, SparseMat
from cychom.structures import (dual_numbers, ground_field, matrix_algebra, matrix_element, product_algebra,
                               square_zero)
from cychom.utils import u
from tests.test_structures.mock import left_unital_algebra

Q = RATIONALS
one = Q.one


def dense(rows):
    return SparseMat.from_dense(rows, Q)


@pytest.fixture
def split_sequence():
    """X = (k -> k), Z = k in degree 0, Y = X ⊕ Z."""
    x = ChainComplex([1, 1], {1: dense([[1]])}, field=Q)
    z = ChainComplex([1, 0], field=Q)
    y = ChainComplex([2, 1], {1: dense([[1], [0]])}, field=Q)
    return dict(
        x=x, y=y, z=z,
        iota={0: dense([[1], [0]]), 1: dense([[1]])},
        pi={0: dense([[0, 1]]), 1: SparseMat.zeros((0, 1), Q)},
        rho={0: dense([[1, 0]]), 1: dense([[1]])},
        sigma={0: dense([[0], [1]]), 1: SparseMat.zeros((1, 0), Q)},
        h={0: dense([[1]])},
    )


def test_kill_contractible_small(split_sequence):
    result = kill_contractible(**split_sequence)
    assert result.passed
    assert result.sigma_tilde[0] == dense([[0], [1]])


@pytest.mark.parametrize(
    ['name', 'value', 'label'],
    (
            ('h', {0: SparseMat.zeros((1, 1), Q)}, 'hd'),
            ('sigma', {0: dense([[0], [2]]), 1: SparseMat.zeros((1, 0), Q)}, 'ps'),
            ('rho', {0: dense([[1, 1]]), 1: dense([[1]])}, 'sp+ir'),
    )
)
def test_kill_contractible_preconditions(split_sequence, name, value, label):
    split_sequence[name] = value
    with pytest.raises(PreconditionError) as e:
        kill_contractible(**split_sequence)
    assert e.value.label == label
    assert u(e.value).startswith('Code 400. Identity (%s) fails in degree 0.' % label)


@settings(derandomize=True, deadline=None, max_examples=100)
@given(st.randoms(use_true_random=False))
def test_kill_contractible_random(rng):
    sequence = random_split_sequence(rng)
    result = kill_contractible(*sequence.args())
    assert result.passed, result.report.failures


def test_kill_contractible_corrects_sigma():
    corrected = 0
    for seed in range(20):
        sequence = random_split_sequence(Random(seed))
        result = kill_contractible(*sequence.args())
        assert result.passed, result.report.failures
        assert result.sigma_tilde[0] == sequence.sigma[0]
        corrected += sum(result.sigma_tilde[n] != sequence.sigma[n] for n in range(1, sequence.z.top + 1))
    assert corrected > 0


@pytest.mark.parametrize(
    'algebra',
    (ground_field(Q), product_algebra(2, Q), dual_numbers(Q), left_unital_algebra()),
)
def test_bar_contraction(algebra):
    result = bar_contraction(algebra, max_degree=3)
    assert result.passed


def test_bar_contraction_without_left_unit():
    with pytest.raises(NoLeftUnitError):
        bar_contraction(square_zero(2, Q), max_degree=2)


@pytest.mark.parametrize(
    'algebra',
    (ground_field(Q), product_algebra(2, Q)),
)
def test_matrix_stability(algebra):
    result = matrix_stability(algebra, 2, max_degree=3)
    assert result.passed
    assert result.trace[1] * result.inclusion[1] == SparseMat.identity(algebra.dim ** 2, Q)


@settings(derandomize=True, deadline=None, max_examples=10)
@given(st.randoms(use_true_random=False))
def test_conjugation_homotopy(rng):
    b = ground_field(Q)
    m, _ = random_invertible(rng, 2, Q)
    gamma = matrix_element(b, 2, {(i, j): {0: v} for i in range(2) for j, v in m.row(i).items()})
    result = conjugation_homotopy(b, 2, gamma, max_degree=2)
    assert result.passed


def test_invert():
    m = matrix_algebra(ground_field(Q), 2)
    swap = matrix_element(ground_field(Q), 2, {(0, 1): {0: one}, (1, 0): {0: one}})
    assert invert(m, swap) == swap
    with pytest.raises(NotInvertibleError):
        invert(m, matrix_element(ground_field(Q), 2, {(0, 0): {0: one}}))


@pytest.mark.parametrize(
    ['algebra', 'dims'],
    (
            (ground_field(Q), [1, 0, 0, 0]),
            (dual_numbers(Q), [2, 1, 1, 1]),
            (left_unital_algebra(), None),
    )
)
def test_hochschild_equivalence(algebra, dims):
    result = hochschild_equivalence(algebra, max_degree=3)
    assert result.passed
    data = result.report.data['dims']
    assert data['cc1'] == data['cc2']
    if dims is not None:
        assert data['cc1'] == dims


def test_hochschild_equivalence_without_left_unit():
    with pytest.raises(NoLeftUnitError):
        hochschild_equivalence(square_zero(2, Q))
