# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.chern import (HOMOLOGOUS, UNDECIDED, associated_idempotent, chern_galois_chain, chern_weil, chw_chain,
                          chw_tensor, connection_independence, verify_factorization)
from cychom.galois import (ConnectionSystem, StrongConnection, cyclic_double_cover, es_coring, hopf_self_bundle,
                           self_bundle_connection, solve_strong_connection)
from cychom.homology.errors import DegreeError
from cychom.linalg import RATIONALS
from cychom.structures import FiniteGroup, comodule_character, function_algebra_of_group, one_dimensional

Q = RATIONALS
one = Q.one


@pytest.fixture(scope='module')
def cover():
    ca = cyclic_double_cover(2, Q)
    connection = solve_strong_connection(ca)
    return ca, connection, es_coring(ca, connection)


@pytest.fixture(scope='module')
def comodules(cover):
    c = cover[0].coalgebra
    return [one_dimensional(c, {0: one, 1: one}, name='trivial'), one_dimensional(c, {0: one, 1: -one}, name='sign')]


def test_chw_tensor_degree_zero():
    hopf = function_algebra_of_group(FiniteGroup.cyclic(2), Q)
    ca = hopf_self_bundle(hopf)
    connection = StrongConnection(ConnectionSystem(ca), self_bundle_connection(hopf))
    # ℓ(δ0) = δ0 ⊗ δ0 + δ1 ⊗ δ1, legs swapped
    assert chw_tensor(connection, {0: one}, 0) == {(0,): one, (3,): one}
    es = es_coring(ca, connection)
    assert chw_chain(es, connection, {0: one}, 2)
    with pytest.raises(DegreeError):
        chw_chain(es, connection, {0: one}, -1)


@pytest.mark.parametrize('n', (0, 1))
def test_chern_weil_sign(cover, comodules, n):
    ca, connection, es = cover
    result = chern_weil(es, connection, comodule_character(comodules[1]), n)
    assert result.passed
    assert result.b_level.degree == 2 * n
    assert result.b_level.is_cycle()


def test_chern_weil_trivial_is_unit_class(cover, comodules):
    ca, connection, es = cover
    trivial = chern_weil(es, connection, comodule_character(comodules[0]), 0).b_level
    unit = ca.algebra.unit
    base = es.base
    assert trivial.chain.components == {0: {(k,): v for k, v in base.coordinates(unit).items()}}


@pytest.mark.parametrize('n', (0, 1))
def test_chern_galois_matches_chern_weil(cover, comodules, n):
    ca, connection, es = cover
    galois = chern_galois_chain(ca, connection, comodules[1], n)
    assert galois.report.passed
    weil = chern_weil(es, connection, comodule_character(comodules[1]), n)
    assert weil.b_level.first_difference(galois) is None


def test_associated_idempotent(cover, comodules):
    ca, connection, _ = cover
    idempotent = associated_idempotent(ca, connection, comodules[1])
    report = idempotent.report()
    assert report.passed
    assert report.data['size'] == idempotent.size
    assert idempotent.size >= 1


@pytest.mark.parametrize('n', (0, 1))
def test_verify_factorization(cover, comodules, n):
    ca, connection, es = cover
    report = verify_factorization(ca, connection, comodules[1], n, es=es)
    assert report.passed, report.failures


def test_connection_independence(cover, comodules):
    ca, connection, _ = cover
    if not connection.family:
        pytest.skip('strong connection is unique')
    other = connection.shifted([1])
    assert other.check().passed
    report = connection_independence(ca, comodules[1], connection, other, 1)
    assert report.data['verdict'] == HOMOLOGOUS
    character = comodule_character(comodules[1])
    report = connection_independence(ca, character, connection, other, 1, comodules=comodules)
    assert report.data['enough_characters']
    assert report.data['verdict'] == HOMOLOGOUS


def test_connection_independence_undecided(cover, comodules):
    ca, connection, _ = cover
    report = connection_independence(ca, comodule_character(comodules[1]), connection, connection, 1)
    assert report.data['verdict'] == UNDECIDED
    assert not report.data['enough_characters']


def test_chern_weil_with_non_unital_connection(cover, comodules):
    ca, unital, _ = cover
    relaxed = solve_strong_connection(ca, unital=False, can=unital.canonical, entw=unital.entwining)
    candidates = [relaxed] + [relaxed.shifted([0] * s + [1]) for s in range(len(relaxed.family))]
    connection = next((x for x in candidates if not x.is_unital()), None)
    if connection is None:
        pytest.skip('every solution of the relaxed system is unital')
    assert connection.check().passed
    result = chern_weil(es_coring(ca, connection), connection, comodule_character(comodules[1]), 1)
    assert result.passed, result.report.failures


def test_associated_idempotent_report_recomputes(cover, comodules):
    ca, connection, _ = cover
    idempotent = associated_idempotent(ca, connection, comodules[1])
    assert idempotent.coinvariance_witness() is None
    idempotent.vector = {k: 2 * v for k, v in idempotent.vector.items()}
    report = idempotent.report()
    assert report.get('entries in B').passed
    assert not report.get('E^2 = E').passed
