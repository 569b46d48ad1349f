# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom.galois.errors import CoactionError
from cychom.linalg import SparseMat, Subspace
from cychom.linalg.errors import NotInSubspaceError
from cychom.report import Report
from cychom.structures import Algebra
from cychom.tensors import BasedSpace
from cychom.utils import cached_property, sparse_add

__all__ = ('ComoduleAlgebra', 'check_comodule_algebra', 'InvariantSubalgebra', 'invariants', 'trivial_coaction')

logger = logging.getLogger(__name__)


class ComoduleAlgebra(object):
    """
    Unital algebra A with a right C-coaction: coaction[i] = {(j, k): c}
    means ρ(a_i) contains c·a_j ⊗ c_k. C needs a grouplike e.
    """

    def __init__(self, algebra, coalgebra, coaction, hopf=None, name=None, validate=True):
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.hopf = hopf
        self.name = name or '%s over %s' % (algebra.name, coalgebra.name)
        self.coaction = {i: {k: v for k, v in six.iteritems(d) if v} for i, d in six.iteritems(coaction)}
        if validate:
            for axiom, witness in self.axiom_witnesses():
                if witness is not None:
                    raise CoactionError(self.name, axiom, witness=witness)

    @property
    def field(self):
        return self.algebra.field

    @property
    def grouplike(self):
        return self.coalgebra.grouplike

    def coact(self, x):
        """ρ on an A-vector, keyed by (a, c)."""
        result = {}
        for i, v in six.iteritems(x):
            sparse_add(result, self.coaction.get(i, {}), v)
        return result

    def coact_tensor(self, x, slot):
        """
        ρ on one slot of a tensor keyed by tuples; the C-factor is appended at the end.
        """
        result = {}
        for key, v in six.iteritems(x):
            for (a, c), w in six.iteritems(self.coaction.get(key[slot], {})):
                sparse_add(result, {key[:slot] + (a,) + key[slot + 1:] + (c,): v * w})
        return result

    @cached_property
    def coaction_matrix(self):
        """ρ: A -> A⊗C, index a * dim C + c."""
        dc = self.coalgebra.dim
        columns = {i: {a * dc + c: v for (a, c), v in six.iteritems(d)} for i, d in six.iteritems(self.coaction)}
        return SparseMat.from_columns(columns, (self.algebra.dim * dc, self.algebra.dim), self.field)

    def axiom_witnesses(self):
        one = self.field.one
        coalgebra = self.coalgebra
        result = []
        coassoc = counit = None
        for i in six.moves.range(self.algebra.dim):
            rho = self.coact({i: one})
            left = self.coact_tensor({(a, c): v for (a, c), v in six.iteritems(rho)}, 0)
            left = {(a, c2, c1): v for (a, c1, c2), v in six.iteritems(left)}
            right = {}
            for (a, c), v in six.iteritems(rho):
                for (c1, c2), w in six.iteritems(coalgebra.comult.get(c, {})):
                    sparse_add(right, {(a, c1, c2): v * w})
            if left != right and coassoc is None:
                coassoc = self.algebra.labels[i]
            back = {}
            for (a, c), v in six.iteritems(rho):
                e = coalgebra.counit.get(c)
                if e:
                    sparse_add(back, {a: v * e})
            if back != {i: one} and counit is None:
                counit = self.algebra.labels[i]
        result.append(('coassociativity', coassoc))
        result.append(('counit', counit))
        return result

    def unit_witness(self):
        """ρ(1) = 1 ⊗ e"""
        unit = self.algebra.unit
        e = self.grouplike
        if unit is None or e is None:
            return 'no unit' if unit is None else 'no grouplike'
        expected = {(a, c): u * v for a, u in six.iteritems(unit) for c, v in six.iteritems(e)}
        if self.coact(unit) != {k: v for k, v in six.iteritems(expected) if v}:
            return self.algebra.format(unit)
        return None

    def multiplicativity_witness(self):
        """ρ(ab) = ρ(a)ρ(b) in A⊗H; only with a Hopf algebra attached."""
        if self.hopf is None:
            return None
        h = self.hopf.algebra
        dim = self.algebra.dim
        for i in six.moves.range(dim):
            for j in six.moves.range(dim):
                left = self.coact(self.algebra.multiply_basis(i, j))
                right = {}
                for (a, c), u in six.iteritems(self.coaction.get(i, {})):
                    for (b, d), v in six.iteritems(self.coaction.get(j, {})):
                        for x, p in six.iteritems(self.algebra.multiply_basis(a, b)):
                            for y, q in six.iteritems(h.multiply_basis(c, d)):
                                sparse_add(right, {(x, y): u * v * p * q})
                if left != right:
                    return self.algebra.labels[i], self.algebra.labels[j]
        return None

    def __repr__(self):
        return '<ComoduleAlgebra %s>' % self.name


def check_comodule_algebra(ca):
    """
    :type ca: ComoduleAlgebra
    :rtype: Report
    """
    report = Report('comodule algebra %s' % ca.name)
    for axiom, witness in ca.axiom_witnesses():
        report.add(axiom, witness is None, witness)
    witness = ca.unit_witness()
    report.add('unit coinvariant', witness is None, witness)
    if ca.hopf is not None:
        witness = ca.multiplicativity_witness()
        report.add('coaction multiplicative', witness is None, witness)
    return report


class InvariantSubalgebra(object):
    """
    B = A^{co C} = {b : ρ(b) = b ⊗ e} as an Algebra on its own basis, with its embedding into A.
    """

    def __init__(self, ca):
        self.comodule_algebra = ca
        field = ca.field
        dim_a, dim_c = ca.algebra.dim, ca.coalgebra.dim
        rows = {}
        for r, row in ca.coaction_matrix.rows_items():
            rows[r] = dict(row)
        for i in six.moves.range(dim_a):
            for c, v in six.iteritems(ca.grouplike):
                r = i * dim_c + c
                rows.setdefault(r, {})
                rows[r][i] = rows[r].get(i, field.zero) - v
        self.subspace = Subspace.kernel(SparseMat(rows, (dim_a * dim_c, dim_a), field))
        self.algebra = self._build_algebra()

    @property
    def dim(self):
        return self.subspace.dim

    def embed(self, b):
        return self.subspace.embed(b)

    def coordinates(self, a, check=True):
        return self.subspace.coordinates(a, check=check)

    @cached_property
    def embedding_matrix(self):
        return self.subspace.embedding_matrix()

    def _build_algebra(self):
        ca = self.comodule_algebra
        a = ca.algebra
        basis = self.subspace.basis
        mult = {}
        for s, x in enumerate(basis):
            for t, y in enumerate(basis):
                product = a.multiply(x, y)
                try:
                    coords = self.coordinates(product)
                except NotInSubspaceError as e:
                    raise CoactionError(ca.name, 'closedness of the invariants', witness=e.witness)
                if coords:
                    mult[(s, t)] = coords
        labels = ['b%d' % s for s in six.moves.range(len(basis))]
        left_unit = None
        if a.unit is not None:
            left_unit = self.coordinates(a.unit)
        algebra = Algebra(BasedSpace(labels, a.field), mult, left_unit=left_unit, name='B(%s)' % ca.name)
        logger.info('invariants of %s: dimension %d', ca.name, algebra.dim)
        return algebra

    def __repr__(self):
        return '<InvariantSubalgebra of dimension %d>' % self.dim


def invariants(ca):
    """
    :type ca: ComoduleAlgebra
    :rtype: InvariantSubalgebra
    """
    return InvariantSubalgebra(ca)


def trivial_coaction(algebra, coalgebra):
    """a -> a ⊗ e"""
    e = coalgebra.grouplike
    coaction = {i: {(i, c): v for c, v in six.iteritems(e)} for i in six.moves.range(algebra.dim)}
    return ComoduleAlgebra(algebra, coalgebra, coaction, name='%s trivially over %s' % (algebra.name, coalgebra.name))
