# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.chern import KSequence, abstract_character, character_coefficient, idempotent_chern, idempotent_sequence
from cychom.chern.errors import KSequenceError, NotIdempotentError
from cychom.homology.errors import DegreeError
from cychom.linalg import RATIONALS
from cychom.structures import matrix_element, product_algebra

Q = RATIONALS
one = Q.one
half = Q('1/2')


@pytest.fixture(scope='module')
def k2():
    return product_algebra(2, Q)


@pytest.fixture(scope='module')
def projector(k2):
    """[[e0 + e1/2, e1/2], [e1/2, e1/2]]: rank one over both points."""
    return matrix_element(k2, 2, {(0, 0): {0: one, 1: half}, (0, 1): {1: half}, (1, 0): {1: half},
                                  (1, 1): {1: half}})


@pytest.mark.parametrize(
    ['m', 'value'],
    ((0, 1), (1, 1), (2, -2), (3, -6), (4, 12), (5, 60)),
)
def test_character_coefficient(m, value):
    assert character_coefficient(m, Q) == Q(value)


def test_idempotent_sequence(k2):
    x = idempotent_sequence(k2, {0: one}, 3)
    assert x.top == 3
    assert x[2] == {(0, 0, 0): one}
    assert x.report().passed
    with pytest.raises(NotIdempotentError) as e:
        idempotent_sequence(k2, {0: Q(2)}, 2)
    assert e.value.witness == 'e0'


def test_sequence_conditions(k2):
    x = KSequence(k2, [{(0,): one}, {(0, 1): one}])
    with pytest.raises(KSequenceError) as e:
        x.check()
    assert (e.value.condition, e.value.degree) == ('t', 1)
    report = x.report()
    assert not report.passed
    assert not report.get('faces in degree 1').passed


def test_abstract_character(k2):
    x = idempotent_sequence(k2, {0: one}, 4)
    ch2 = abstract_character(x, 2)
    assert ch2.report.passed
    assert ch2.is_cycle()
    assert ch2.chain.columns() == [0, 1, 2, 3, 4]
    assert ch2.chain.column(4) == {(0,): one}
    assert ch2.chain.column(0) == {(0,) * 5: Q(12)}
    ch1 = abstract_character(x, 1)
    assert ch2.periodicity().homologous_to(ch1) == {}
    with pytest.raises(DegreeError):
        abstract_character(idempotent_sequence(k2, {0: one}, 2), 2)
    with pytest.raises(DegreeError):
        ch2.homologous_to(ch1)


def test_idempotent_chern_degree_zero(k2, projector):
    ch0 = idempotent_chern(k2, 2, projector, 0)
    assert ch0.report.passed
    assert ch0.chain.components == {0: {(0,): one, (1,): one}}


@pytest.mark.parametrize('n', (1, 2))
def test_idempotent_chern_rank_one(k2, projector, n):
    ch = idempotent_chern(k2, 2, projector, n)
    assert ch.report.passed
    unit = idempotent_chern(k2, 1, {0: one, 1: one}, n)
    assert ch.homologous_to(unit) is not None
    assert ch.periodicity().homologous_to(idempotent_chern(k2, 2, projector, n - 1)) is not None


def test_idempotent_chern_rank_differs(k2):
    ch = idempotent_chern(k2, 1, {0: one}, 1)
    unit = idempotent_chern(k2, 1, {0: one, 1: one}, 1)
    assert ch.homologous_to(unit) is None
    assert ch.first_difference(unit) is not None
