# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom import settings
from cychom.chern.errors import CotensorEscapeError
from cychom.chern.sequence import CharacterClass, KSequence, abstract_character
from cychom.homology import tot_cc
from cychom.homology.errors import DegreeError
from cychom.report import Report
from cychom.tensors import LinearMap
from cychom.utils import sparse_add

__all__ = ('chw_tensor', 'chw_chain', 'chw_sequence', 'ChernWeilResult', 'chern_weil')

logger = logging.getLogger(__name__)


def _element(c):
    return getattr(c, 'element', c)


def chw_tensor(connection, c, m):
    """
    c_m(ℓ)(c) in (A⊗A)^{⊗(m+1)}, keyed by tuples of A⊗A codes (x * dim A + y):
    with Δ^(m)(c) = c1 ⊗ ... ⊗ c_{m+1}, slot 0 is ℓ²(c_{m+1}) ⊗ ℓ¹(c1) and
    slot j is ℓ²(c_j) ⊗ ℓ¹(c_{j+1}).
    """
    ca = connection.comodule_algebra
    da = ca.algebra.dim
    result = {}
    for legs, v in six.iteritems(ca.coalgebra.iterated_comultiply(_element(c), m)):
        partial = {(): v}
        for leg in legs:
            step = {}
            for prefix, u in six.iteritems(partial):
                for pair, w in six.iteritems(connection.terms(leg)):
                    sparse_add(step, {prefix + (pair,): u * w})
            partial = step
        for pairs, u in six.iteritems(partial):
            key = tuple(pairs[j - 1][1] * da + pairs[j][0] for j in six.moves.range(m + 1))
            sparse_add(result, {key: u})
    return result


def chw_chain(es, connection, c, m, check=None):
    """
    c_m(ℓ)(c) in M^{⊗(m+1)}, keyed by tuples of M basis indices. Coordinates are read
    at the free columns of M; when check is on the tensor is rebuilt and compared.
    :type es: cychom.galois.ESCoring
    :param check: defaults to m <= CHW_MEMBERSHIP_MAX_DEGREE
    :raises CotensorEscapeError:
    """
    if m < 0:
        raise DegreeError(m, 0)
    if check is None:
        check = m <= settings.CHW_MEMBERSHIP_MAX_DEGREE
    tensor = chw_tensor(connection, c, m)
    position = {j: k for k, j in enumerate(es.space.free)}
    coords = {}
    for key, v in six.iteritems(tensor):
        slots = tuple(position.get(code) for code in key)
        if None not in slots:
            coords[slots] = v
    if check:
        rebuilt = {}
        for slots, v in six.iteritems(coords):
            partial = {(): v}
            for s in slots:
                step = {}
                for prefix, u in six.iteritems(partial):
                    for code, w in six.iteritems(es.space.basis[s]):
                        sparse_add(step, {prefix + (code,): u * w})
                partial = step
            sparse_add(rebuilt, partial)
        diff = sparse_add(rebuilt, tensor, -es.field.one)
        if diff:
            raise CotensorEscapeError(m, witness=min(diff))
    return coords


def chw_sequence(es, connection, c, n):
    """
    {c_m(ℓ)(c)}, m = 0..2n, as a sequence over the ε-ring of M in its adapted basis.
    :rtype: KSequence
    """
    re = es.row_extension
    one = es.field.one
    to_adapted = LinearMap.from_images(es.augmented_module.module, re.space,
                                       {s: re.to_adapted({s: one}) for s in six.moves.range(es.dim)})
    upstairs = KSequence(re.ring, [chw_chain(es, connection, c, m) for m in six.moves.range(2 * n + 1)])
    return upstairs.push(to_adapted, re.ring, name='chw(%s)' % es.comodule_algebra.name)


class ChernWeilResult(object):
    """Chern-Weil cycle over the ε-ring of M and its image over B."""

    def __init__(self, m_level, b_level, report):
        self.m_level = m_level
        self.b_level = b_level
        self.report = report

    @property
    def passed(self):
        return self.report.passed

    def __repr__(self):
        return '<ChernWeilResult degree %d>' % self.b_level.degree


def chern_weil(es, connection, c, n):
    """
    chw_n(c): the character of the chw sequence in Tot CC(M), pushed to Tot CC(B) by ε.
    :param c: Cotrace or C-vector
    :rtype: ChernWeilResult
    :raises KSequenceError:
    :raises CotensorEscapeError:
    """
    re = es.row_extension
    sequence = chw_sequence(es, connection, c, n)
    m_level = abstract_character(sequence, n)
    base = es.base.algebra
    total = tot_cc(base, 'full', max_degree=2 * n)
    chain = m_level.chain.map_slots(total.module, re.epsilon_images)
    boundary = total.total_boundary(chain)
    b_report = Report('chw_%d over %s' % (n, base.name))
    b_report.add('cycle', boundary.is_zero(), None if boundary.is_zero() else boundary.format())
    b_level = CharacterClass(2 * n, chain, total, b_report)

    report = Report('Chern-Weil of %s in degree %d' % (es.comodule_algebra.name, 2 * n))
    report.extend(m_level.report, prefix='M')
    report.extend(b_report, prefix='B')
    logger.info('chw_%d of %s: %s', n, es.comodule_algebra.name, 'pass' if report.passed else 'FAIL')
    return ChernWeilResult(m_level, b_level, report)
