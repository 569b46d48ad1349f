# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.linalg import RATIONALS
from cychom.structures import (Cotrace, FiniteGroup, character_decomposition, check_coalgebra, check_comodule,
                               check_hopf, comodule_character, comodule_from_representation, cotrace_basis,
                               direct_sum, enough_characters, function_algebra_of_group, ground_coalgebra,
                               group_algebra, one_dimensional, quaternion_group, small_groups, symmetric_group_s3)
from cychom.structures.errors import ComoduleAxiomError, CotraceError, InvalidGroupError, NonCoassociativeError

from tests.test_structures.mock import non_coassociative_coalgebra

Q = RATIONALS
one = Q.one

CLASS_COUNTS = {
    'Z1': 1, 'Z2': 2, 'Z3': 3, 'Z4': 4, 'Z2xZ2': 4, 'Z5': 5, 'Z6': 6, 'S3': 3, 'Z7': 7,
    'Z8': 8, 'Z4xZ2': 8, 'Z2xZ2xZ2': 8, 'D4': 5, 'Q8': 5,
}


@pytest.fixture(scope='module')
def kz2():
    return function_algebra_of_group(FiniteGroup.cyclic(2), Q)


@pytest.fixture(scope='module')
def ks3():
    return function_algebra_of_group(symmetric_group_s3(), Q)


def test_small_groups_catalogue():
    groups = small_groups()
    assert sorted(name for name, _ in groups) == sorted(CLASS_COUNTS)
    assert [g.order for _, g in groups] == sorted(g.order for _, g in groups)
    for name, group in groups:
        assert group.conjugacy_class_count() == CLASS_COUNTS[name], name


@pytest.mark.parametrize(['name', 'count'], sorted(CLASS_COUNTS.items()))
def test_cotraces_count_conjugacy_classes(name, count):
    group = dict(small_groups())[name]
    coalgebra = function_algebra_of_group(group, Q).coalgebra
    assert len(cotrace_basis(coalgebra)) == count


def test_invalid_group_tables():
    with pytest.raises(InvalidGroupError):
        FiniteGroup(['a', 'b'], [[0, 0], [1, 1]])
    with pytest.raises(InvalidGroupError):
        FiniteGroup(['a', 'b'], [[0, 1]])


def test_groups():
    z4 = FiniteGroup.cyclic(4)
    assert z4.inverse(1) == 3
    assert z4.identity == 0
    sub, embedding = z4.subgroup([0, 2])
    assert sub.order == 2
    assert embedding == [0, 2]
    with pytest.raises(InvalidGroupError):
        z4.subgroup([0, 1])
    q8 = quaternion_group()
    assert q8.order == 8
    assert sum(1 for g in q8.elements if q8.multiply(g, g) == q8.identity) == 2


@pytest.mark.parametrize('group', (FiniteGroup.cyclic(3), symmetric_group_s3(), quaternion_group()))
def test_hopf_axioms(group):
    for hopf in (function_algebra_of_group(group, Q), group_algebra(group, Q)):
        assert check_hopf(hopf).passed
        assert check_coalgebra(hopf.coalgebra).passed


def test_coassociativity_failure():
    with pytest.raises(NonCoassociativeError):
        non_coassociative_coalgebra()
    report = check_coalgebra(non_coassociative_coalgebra(validate=False))
    assert not report.get('coassociativity').passed


def test_iterated_comultiply(kz2):
    c = kz2.coalgebra
    assert c.iterated_comultiply({1: one}, 0) == {(1,): one}
    assert c.iterated_comultiply({1: one}, 1) == {(0, 1): one, (1, 0): one}
    assert c.iterated_comultiply({0: one}, 2) == {(0, 0, 0): one, (0, 1, 1): one, (1, 0, 1): one, (1, 1, 0): one}


def test_grouplikes(kz2):
    c = kz2.coalgebra
    assert c.is_grouplike({0: one, 1: one})
    assert c.is_grouplike({0: one, 1: -one})
    assert not c.is_grouplike({0: one})
    assert c.grouplike_candidates() == [{0: one, 1: one}, {0: one, 1: -one}]


def test_cotrace_check(ks3):
    c = ks3.coalgebra
    Cotrace(c, {1: one, 2: one, 5: one})
    with pytest.raises(CotraceError):
        Cotrace(c, {1: one})


def test_comodules_and_characters(kz2):
    c = kz2.coalgebra
    sign = one_dimensional(c, {0: one, 1: -one}, name='sign')
    trivial = one_dimensional(c, {0: one, 1: one}, name='trivial')
    assert check_comodule(sign).passed
    assert comodule_character(sign).element == {0: one, 1: -one}
    both = direct_sum(sign, trivial)
    assert both.dim == 2
    assert comodule_character(both).element == {0: Q(2)}
    assert enough_characters(c, [sign, trivial])
    assert not enough_characters(c, [sign])
    delta1 = Cotrace(c, {1: one})
    assert character_decomposition(c, [sign, trivial], delta1) == {0: Q('-1/2'), 1: Q('1/2')}
    assert character_decomposition(c, [sign], delta1) is None


def test_comodule_axioms_checked(kz2):
    with pytest.raises(ComoduleAxiomError):
        one_dimensional(kz2.coalgebra, {1: one})


def test_representation_comodule(ks3):
    group = symmetric_group_s3()
    # the sign representation through the permutation parity of the sorted elements
    signs = {0: 1, 1: -1, 2: -1, 3: 1, 4: 1, 5: -1}
    v = comodule_from_representation(ks3.coalgebra, group, [[[signs[g]]] for g in group.elements], name='sign')
    assert check_comodule(v).passed
    assert not enough_characters(ks3.coalgebra, [v])


def test_ground_coalgebra():
    k = ground_coalgebra(Q)
    assert check_coalgebra(k).passed
    assert len(cotrace_basis(k)) == 1
