# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom.chern.errors import KSequenceError, NotIdempotentError
from cychom.homology import CyclicModule, connes_S, homologous, tot_cc
from cychom.homology.errors import DegreeError
from cychom.report import Report
from cychom.structures import matrix_algebra
from cychom.tensors import TensorElem, apply_tensor_power
from cychom.utils import cyclic_sign, sparse_add, sparse_scale, sparse_tensor

__all__ = ('KSequence', 'idempotent_sequence', 'character_coefficient', 'CharacterClass', 'abstract_character',
           'idempotent_chern', 'trace_chain')

logger = logging.getLogger(__name__)


class KSequence(object):
    """
    x_0, ..., x_top with x_m in A^{⊗(m+1)} such that t x_m = (-1)^m x_m
    (t carrying its sign, so x_m is rotation invariant) and d_i x_m = x_{m-1} for every face.
    """

    def __init__(self, algebra, terms, name=None):
        self.algebra = algebra
        self.module = CyclicModule(algebra)
        self.terms = [{k: v for k, v in six.iteritems(x) if v} for x in terms]
        self.name = name or 'x'

    @property
    def top(self):
        return len(self.terms) - 1

    def __getitem__(self, m):
        return self.terms[m]

    def cyclic_witness(self, m):
        x = self.terms[m]
        rotated = self.module.apply('t', x)
        expected = sparse_scale(x, self.algebra.field(cyclic_sign(m)))
        diff = sparse_add(rotated, expected, -self.algebra.field.one)
        return min(diff) if diff else None

    def face_witness(self, m):
        if m == 0:
            return None
        module = self.module
        for i in six.moves.range(m + 1):
            image = module.apply(lambda key: module.face(i, key), self.terms[m])
            if image != self.terms[m - 1]:
                return i
        return None

    def witnesses(self):
        """(condition, m, witness) for every failure."""
        result = []
        for m in six.moves.range(self.top + 1):
            witness = self.cyclic_witness(m)
            if witness is not None:
                result.append(('t', m, witness))
            witness = self.face_witness(m)
            if witness is not None:
                result.append(('face', m, 'd%d' % witness))
        return result

    def check(self):
        """
        :raises KSequenceError: naming the first violated condition
        """
        for condition, m, witness in self.witnesses():
            raise KSequenceError(condition, m, witness=witness)
        return self

    def report(self):
        report = Report('sequence %s' % self.name)
        failures = {(condition, m): witness for condition, m, witness in self.witnesses()}
        for m in six.moves.range(self.top + 1):
            witness = failures.get(('t', m))
            report.add('cyclic symmetry in degree %d' % m, witness is None, witness)
            if m:
                witness = failures.get(('face', m))
                report.add('faces in degree %d' % m, witness is None, witness)
        return report

    def push(self, linear_map, algebra, name=None):
        """
        f^{⊗(m+1)} on every term; f must be an algebra map for the result to stay a sequence.
        :type linear_map: cychom.tensors.LinearMap
        """
        terms = []
        for m, x in enumerate(self.terms):
            element = TensorElem([linear_map.source] * (m + 1), x)
            terms.append(apply_tensor_power(linear_map, m + 1, element).coeffs)
        return KSequence(algebra, terms, name=name or self.name)


def idempotent_sequence(algebra, e, top):
    """
    c_m(e) = e ⊗ ... ⊗ e (m + 1 factors) for m = 0..top.
    :raises NotIdempotentError:
    """
    square = algebra.multiply(e, e)
    e = {k: v for k, v in six.iteritems(e) if v}
    if square != e:
        diff = sparse_add(square, e, -algebra.field.one)
        raise NotIdempotentError(algebra.name, witness=algebra.labels[min(diff)])
    return KSequence(algebra, [sparse_tensor([e] * (m + 1)) for m in six.moves.range(top + 1)], name='c(e)')


def character_coefficient(m, field):
    """(-1)^{⌊m/2⌋} m!/⌊m/2⌋!"""
    half = m // 2
    value = 1
    for k in six.moves.range(half + 1, m + 1):
        value *= k
    return field(-value if half % 2 else value)


class CharacterClass(object):
    """A cycle of Tot CC in degree 2n with the total complex it lives in."""

    def __init__(self, degree, chain, total, report=None):
        self.degree = degree
        self.chain = chain
        self.total = total
        self.report = report or Report('character in degree %d' % degree)

    @property
    def field(self):
        return self.total.field

    def encoded(self):
        return self.total.encode(self.chain)

    def boundary(self):
        return self.total.total_boundary(self.chain)

    def is_cycle(self):
        return self.boundary().is_zero()

    def periodicity(self):
        """S applied to the cycle; same total complex."""
        return CharacterClass(self.degree - 2, connes_S(self.chain), self.total)

    def homologous_to(self, other):
        """
        Witness z with d z = self - other (empty when equal), or None.
        :type other: CharacterClass
        """
        if other.degree != self.degree:
            raise DegreeError(other.degree, self.degree)
        total = self.total if self.total.top >= other.total.top else other.total
        return homologous(total, self.degree, total.encode(self.chain), total.encode(other.chain))

    def first_difference(self, other):
        """Smallest coordinate where the two chains differ, or None."""
        diff = sparse_add(self.encoded(), self.total.encode(other.chain), -self.field.one)
        return min(diff) if diff else None

    def format(self):
        return self.chain.format()

    def __repr__(self):
        return '<CharacterClass degree %d in %s>' % (self.degree, self.total.name)


def abstract_character(x, n, total=None):
    """
    ch_n(x) = Σ_m (-1)^{⌊m/2⌋} m!/⌊m/2⌋! x_m, x_m placed in column 2n - m.
    :type x: KSequence
    :rtype: CharacterClass
    :raises KSequenceError:
    """
    if n < 0:
        raise DegreeError(n, 0)
    if x.top < 2 * n:
        raise DegreeError(x.top, 2 * n)
    x.check()
    field = x.algebra.field
    total = total or tot_cc(x.algebra, 'full', max_degree=2 * n)
    module = total.module
    weighted = [sparse_scale(x[m], character_coefficient(m, field)) for m in six.moves.range(2 * n + 1)]
    chain = total.chain(2 * n, {2 * n - m: weighted[m] for m in six.moves.range(2 * n + 1)})

    report = Report('character ch_%d of %s' % (n, x.name))
    report.extend(x.report(), prefix='sequence')
    for m in six.moves.range(1, 2 * n + 1):
        p = 2 * n - m
        if m % 2 == 0:
            # b on an even column against (1 - t) from the odd column to its right
            balance = module.apply('b', weighted[m])
            sparse_add(balance, weighted[m - 1])
            sparse_add(balance, module.apply('t', weighted[m - 1]), -field.one)
        else:
            # -b′ on an odd column against N from the even column to its right
            balance = module.apply('b_prime', weighted[m])
            balance = sparse_add(sparse_scale(balance, -field.one), module.apply('N', weighted[m - 1]))
        report.add('column %d balanced' % p, not balance, min(balance) if balance else None)
    boundary = total.total_boundary(chain)
    report.add('cycle', boundary.is_zero(), None if boundary.is_zero() else boundary.format())
    logger.info('ch_%d of %s: cycle %s', n, x.name, boundary.is_zero())
    return CharacterClass(2 * n, chain, total, report)


def trace_chain(chain, size, total):
    """
    tr(E_{i0 j0}(b0) ⊗ ... ⊗ E_{im jm}(bm)) = δ_{j0 i1} ... δ_{jm i0} b0 ⊗ ... ⊗ bm, slotwise on a
    chain of Tot CC(M_size(B)).
    :param total: total complex of B
    """
    dim = total.algebra.dim
    components = {}
    for p, vector in six.iteritems(chain.components):
        target = components.setdefault(p, {})
        for key, c in six.iteritems(vector):
            slots = []
            for index in key:
                position, k = divmod(index, dim)
                slots.append(divmod(position, size) + (k,))
            if all(slots[r][1] == slots[(r + 1) % len(slots)][0] for r in six.moves.range(len(slots))):
                sparse_add(target, {tuple(s[2] for s in slots): c})
    return total.chain(chain.degree, components)


def idempotent_chern(b, size, e, n):
    """
    Chern character of an idempotent e of M_size(B), pushed down to Tot CC(B) by the trace.
    :param e: M_size(B)-vector, see cychom.structures.matrix_element
    :rtype: CharacterClass
    :raises NotIdempotentError:
    """
    matrices = matrix_algebra(b, size)
    upstairs = abstract_character(idempotent_sequence(matrices, e, 2 * n), n)
    total = tot_cc(b, 'full', max_degree=2 * n)
    chain = trace_chain(upstairs.chain, size, total)
    report = Report('idempotent character ch_%d over %s' % (n, b.name))
    report.extend(upstairs.report, prefix=matrices.name)
    boundary = total.total_boundary(chain)
    report.add('trace is a cycle', boundary.is_zero(), None if boundary.is_zero() else boundary.format())
    return CharacterClass(2 * n, chain, total, report)
