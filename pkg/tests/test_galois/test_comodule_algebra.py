# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.galois import ComoduleAlgebra, check_comodule_algebra, invariants, subgroup_bundle, trivial_coaction
from cychom.galois.errors import CoactionError
from cychom.linalg import RATIONALS
from cychom.structures import FiniteGroup, product_algebra, symmetric_group_s3
from tests.test_galois.mock import double_cover, kz2, product_bundle, self_bundle, self_bundle_without_hopf

Q = RATIONALS
one = Q.one


@pytest.mark.parametrize(
    ['factory', 'dim_b'],
    (
            (self_bundle, 1),
            (self_bundle_without_hopf, 1),
            (double_cover, 2),
            (product_bundle, 2),
    )
)
def test_invariants(factory, dim_b):
    ca = factory()
    assert check_comodule_algebra(ca).passed
    b = invariants(ca)
    assert b.dim == dim_b
    assert b.algebra.unit is not None
    assert b.embed(b.algebra.unit) == ca.algebra.unit


def test_subgroup_bundle_orbits():
    group = FiniteGroup.cyclic(6)
    ca = subgroup_bundle(group, [0, 2, 4], Q)
    assert check_comodule_algebra(ca).passed
    assert invariants(ca).dim == 2


def test_subgroup_bundle_nonabelian():
    s3 = symmetric_group_s3()
    ca = subgroup_bundle(s3, [0, 1], Q)
    assert check_comodule_algebra(ca).passed
    assert invariants(ca).dim == 3


def test_trivial_coaction():
    ca = trivial_coaction(product_algebra(2, Q), kz2().coalgebra)
    assert check_comodule_algebra(ca).passed
    assert invariants(ca).dim == 2


def test_bad_coaction():
    h = kz2()
    with pytest.raises(CoactionError) as e:
        ComoduleAlgebra(h.algebra, h.coalgebra, {0: {(0, 0): Q(2)}, 1: {(1, 0): one}})
    assert e.value.axiom == 'coassociativity'
    ca = ComoduleAlgebra(h.algebra, h.coalgebra, {0: {(0, 0): Q(2)}}, validate=False)
    report = check_comodule_algebra(ca)
    assert not report.passed
    assert report.get('counit').witness == 'd0'
