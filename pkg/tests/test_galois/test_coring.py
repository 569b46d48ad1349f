# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.galois import RowIsomorphism, es_coring, row_iso_omega, solve_strong_connection
from cychom.galois.errors import NotHopfError
from cychom.linalg import RATIONALS
from cychom.rowext import certify_epsilon_equivalence
from cychom.structures import check_algebra
from tests.test_galois.mock import double_cover, product_bundle, self_bundle, self_bundle_without_hopf

Q = RATIONALS
one = Q.one


def coring(ca):
    return es_coring(ca, solve_strong_connection(ca))


@pytest.fixture(scope='module')
def cover():
    return coring(double_cover())


@pytest.mark.parametrize(
    ['factory', 'dims', 'blocks'],
    (
            (self_bundle, {'M': 2, 'B': 1, 'I': 1}, [1, 1]),
            (double_cover, {'M': 8, 'B': 2, 'I': 6}, [2, 6]),
            (product_bundle, {'M': 8, 'B': 2, 'I': 6}, [2, 6]),
    )
)
def test_es_coring(factory, dims, blocks):
    es = coring(factory())
    report = es.check()
    assert report.passed
    assert report.data['dims'] == dims
    row = RowIsomorphism(es).report()
    assert row.passed
    assert row.data['blocks'] == blocks


def test_es_ring_is_left_unital_only(cover):
    re = cover.row_extension
    assert re.check_invariants().passed
    data = check_algebra(re.ring).data
    assert data['left_unital']
    assert not data['right_unital']


def test_counit_of_splitting(cover):
    for x, m in sorted(cover.sigma.items()):
        assert cover.counit(m) == {x: one}


def test_es_epsilon_equivalence():
    es = coring(self_bundle())
    report = certify_epsilon_equivalence(es.row_extension, max_degree=2, cyclic_degree=2)
    assert report.passed
    assert report.data['dims']['HH(M)'] == [1, 0, 0]


def test_row_iso_needs_hopf():
    es = coring(self_bundle_without_hopf())
    assert es.check().passed
    with pytest.raises(NotHopfError):
        row_iso_omega(es)
    assert 'M closed in A(x)A^op' not in [c.name for c in es.check().certificates]


@pytest.mark.parametrize('factory', (self_bundle, double_cover))
def test_cotensor_closed_under_products(factory):
    es = coring(factory())
    assert es.closure_witness() is None
    assert es.check().get('M closed in A(x)A^op').passed


def test_block_matrix_report(cover):
    row = row_iso_omega(cover)
    report = row.report()
    assert [c.name for c in report.certificates] == ['bijective', 'multiplicative']
    assert report.passed
    assert row.rank == cover.dim == 8
