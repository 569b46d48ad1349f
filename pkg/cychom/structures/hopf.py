# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six

from cychom.report import Report
from cychom.structures.errors import HopfAxiomError
from cychom.utils import sparse_add

__all__ = ('HopfAlgebra', 'check_hopf')


class HopfAlgebra(object):
    """
    An algebra and a coalgebra on the same space, with antipode
    antipode[i] = S(e_i) as a sparse vector.
    """

    def __init__(self, algebra, coalgebra, antipode, name=None, validate=True):
        if algebra.space != coalgebra.space:
            raise HopfAxiomError(name or algebra.name, 'same underlying space')
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.antipode = {i: dict(v) for i, v in six.iteritems(antipode)}
        self.name = name or algebra.name
        if validate:
            report = check_hopf(self)
            for c in report.failures:
                raise HopfAxiomError(self.name, c.name, witness=c.witness)

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def unit(self):
        return self.algebra.unit

    def apply_antipode(self, x):
        result = {}
        for i, a in six.iteritems(x):
            sparse_add(result, self.antipode.get(i, {}), a)
        return result

    def tensor_multiply(self, x, y):
        """Product in H⊗H of two elements keyed by pairs."""
        result = {}
        for (a, b), u in six.iteritems(x):
            for (c, d), v in six.iteritems(y):
                left = self.algebra.multiply_basis(a, c)
                right = self.algebra.multiply_basis(b, d)
                for i, p in six.iteritems(left):
                    for j, q in six.iteritems(right):
                        sparse_add(result, {(i, j): u * v * p * q})
        return result


def check_hopf(h):
    """
    Bialgebra compatibility and antipode axioms on all basis elements.
    :type h: HopfAlgebra
    :rtype: Report
    """
    a, c = h.algebra, h.coalgebra
    field = h.field
    one = field.one
    report = Report('hopf algebra %s' % h.name)
    unit = a.unit
    report.add('unital', unit is not None)
    if unit is None:
        return report

    witness = None
    for i in six.moves.range(h.dim):
        for j in six.moves.range(h.dim):
            lhs = c.comultiply(a.multiply_basis(i, j))
            rhs = h.tensor_multiply(c.comult.get(i, {}), c.comult.get(j, {}))
            if lhs != rhs:
                witness = (a.labels[i], a.labels[j])
                break
        if witness:
            break
    report.add('comultiplication multiplicative', witness is None, witness)

    witness = None
    for i in six.moves.range(h.dim):
        for j in six.moves.range(h.dim):
            if c.epsilon(a.multiply_basis(i, j)) != c.epsilon({i: one}) * c.epsilon({j: one}):
                witness = (a.labels[i], a.labels[j])
                break
        if witness:
            break
    report.add('counit multiplicative', witness is None, witness)

    report.add('unit grouplike', c.is_grouplike(unit), None if c.is_grouplike(unit) else a.format(unit))

    left_witness = right_witness = None
    for i in six.moves.range(h.dim):
        expected = {k: c.epsilon({i: one}) * v for k, v in six.iteritems(unit)}
        expected = {k: v for k, v in six.iteritems(expected) if v}
        left, right = {}, {}
        for (j, k), v in six.iteritems(c.comult.get(i, {})):
            sparse_add(left, a.multiply(h.apply_antipode({j: one}), {k: one}), v)
            sparse_add(right, a.multiply({j: one}, h.apply_antipode({k: one})), v)
        if left != expected and left_witness is None:
            left_witness = a.labels[i]
        if right != expected and right_witness is None:
            right_witness = a.labels[i]
    report.add('antipode left', left_witness is None, left_witness)
    report.add('antipode right', right_witness is None, right_witness)

    involutive = all(h.apply_antipode(h.apply_antipode({i: one})) == {i: one} for i in six.moves.range(h.dim))
    multiplicative = all(
        h.apply_antipode(a.multiply_basis(i, j)) == a.multiply(h.apply_antipode({i: one}), h.apply_antipode({j: one}))
        for i in six.moves.range(h.dim) for j in six.moves.range(h.dim))
    report.data['antipode_involutive'] = involutive
    report.data['antipode_multiplicative'] = multiplicative
    return report
