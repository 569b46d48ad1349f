# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.homology import homology_dims, tot_cc
from cychom.linalg import RATIONALS
from cychom.rowext import AugmentedModule, free_augmented_module, line_extension, normalize_cocycle, row_extension
from cychom.rowext.errors import NoRightUnitError, NotLeftLinearError, SectionError
from cychom.structures import ground_field, product_algebra
from cychom.tensors import BasedSpace
from tests.test_structures.mock import left_unital_algebra

Q = RATIONALS
one = Q.one


@pytest.fixture(scope='module')
def line():
    return row_extension(*line_extension(Q))


@pytest.fixture(scope='module')
def twisted():
    return row_extension(*line_extension(Q, twisted=True))


def test_line_ring(line):
    assert line.ideal_dim == 1
    assert line.space.labels == ('i0', 's(1)')
    assert line.ring.multiply_basis(1, 0) == {0: one}
    assert line.ring.multiply_basis(1, 1) == {1: one}
    assert line.ring.multiply_basis(0, 1) == {}
    assert line.is_normalized()
    report = line.check_invariants()
    assert report.passed
    assert report.data['dim'] == 2
    assert report.data['ideal_dim'] == 1
    assert line.ring.left_unit == {1: one}


def test_twisted_line_cocycle(twisted):
    assert not twisted.is_normalized()
    assert twisted.cocycle_table == {(0, 0): {0: one}}
    assert not twisted.augmented.is_unitary()
    assert twisted.check_invariants().passed


def test_normalize_cocycle(twisted):
    normalized, automorphism, report = normalize_cocycle(twisted)
    assert report.passed
    assert normalized.is_normalized()
    assert normalized.sigma[0] == {0: one, 1: one}
    assert automorphism.column(0) == {0: one}
    assert report.data['lambda'] == {'1': '-i0'}


def test_normalize_already_normal(line):
    normalized, automorphism, report = normalize_cocycle(line)
    assert report.passed
    assert normalized.sigma == line.sigma
    assert 'lambda' in report.data and report.data['lambda'] == {}


def test_identity_augmentation():
    base = product_algebra(2, Q)
    re = row_extension(free_augmented_module(base, []), {0: {0: one}, 1: {1: one}})
    assert re.ideal_dim == 0
    assert re.ring.multiply_basis(0, 0) == {0: one}
    assert re.ring.multiply_basis(0, 1) == {}
    assert homology_dims(tot_cc(re.ring, 'cc1', 2)) == homology_dims(tot_cc(base, 'cc1', 2))


def test_section_errors():
    am, _ = line_extension(Q)
    with pytest.raises(SectionError):
        row_extension(am, {0: {1: one}})
    space = BasedSpace(['m'], Q)
    with pytest.raises(SectionError):
        row_extension(AugmentedModule(ground_field(Q), space, {(0, 0): {0: one}}, {}), {})


def test_not_left_linear():
    space = BasedSpace(['m'], Q)
    with pytest.raises(NotLeftLinearError) as e:
        AugmentedModule(product_algebra(2, Q), space, {(0, 0): {0: one}}, {0: {1: one}})
    assert e.value.witness == ('e0', 'm')


def test_normalize_without_right_unit():
    base = left_unital_algebra()
    am = AugmentedModule(base, BasedSpace(['e', 'x'], Q), {(0, 0): {0: one}, (0, 1): {1: one}},
                         {0: {0: one}, 1: {1: one}})
    re = row_extension(am, {0: {0: one}, 1: {1: one}})
    with pytest.raises(NoRightUnitError):
        normalize_cocycle(re)
