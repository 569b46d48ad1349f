# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom.galois.comodule_algebra import invariants
from cychom.galois.errors import NotGaloisError, NotPrincipalError
from cychom.linalg import Quotient, SparseMat, inverse, rank
from cychom.report import Report
from cychom.utils import cached_property, sparse_add

__all__ = ('CanonicalMap', 'canonical_map', 'Entwining', 'entwining', 'translation_map', 'check_translation_map')

logger = logging.getLogger(__name__)


class CanonicalMap(object):
    """
    can: A ⊗_B A -> A ⊗ C, a ⊗ a′ -> a a′(0) ⊗ a′(1), on the quotient of A ⊗ A
    by the relations ab ⊗ a′ - a ⊗ ba′. A⊗A is indexed i * dim A + j,
    A⊗C is indexed a * dim C + c.
    """

    def __init__(self, ca, base=None):
        self.comodule_algebra = ca
        self.base = base or invariants(ca)
        algebra = ca.algebra
        field = ca.field
        dim_a, dim_c = algebra.dim, ca.coalgebra.dim
        self.dim_a, self.dim_c = dim_a, dim_c
        relations = []
        for w in self.base.subspace.basis:
            for i in six.moves.range(dim_a):
                for j in six.moves.range(dim_a):
                    relation = {}
                    for k, v in six.iteritems(algebra.multiply({i: field.one}, w)):
                        sparse_add(relation, {k * dim_a + j: v})
                    for k, v in six.iteritems(algebra.multiply(w, {j: field.one})):
                        sparse_add(relation, {i * dim_a + k: -v})
                    if relation:
                        relations.append(relation)
        self.relations = relations
        self.quotient = Quotient(relations, dim_a * dim_a, field)
        self.full = self._full_matrix()
        columns = {k: self.full.column(j) for k, j in enumerate(self.quotient.representatives)}
        self.matrix = SparseMat.from_columns(columns, (dim_a * dim_c, self.quotient.dim), field)
        self.rank = rank(self.matrix)
        source, target = self.quotient.dim, dim_a * dim_c
        logger.info('canonical map of %s: %d -> %d, rank %d', ca.name, source, target, self.rank)
        if not (self.rank == source == target):
            raise NotGaloisError(ca.name, self.rank, source, target)
        self.inverse = inverse(self.matrix)

    def _full_matrix(self):
        ca = self.comodule_algebra
        one = ca.field.one
        columns = {}
        for i in six.moves.range(self.dim_a):
            for j in six.moves.range(self.dim_a):
                columns[i * self.dim_a + j] = self.apply_tensor({(i, j): one})
        return SparseMat.from_columns(columns, (self.dim_a * self.dim_c, self.dim_a * self.dim_a), ca.field)

    def apply_tensor(self, x):
        """can on an element of A ⊗ A keyed by (i, j), as an encoded A⊗C vector."""
        ca = self.comodule_algebra
        algebra = ca.algebra
        result = {}
        for (i, j), v in six.iteritems(x):
            for (a, c), w in six.iteritems(ca.coaction.get(j, {})):
                for k, u in six.iteritems(algebra.multiply_basis(i, a)):
                    sparse_add(result, {k * self.dim_c + c: v * w * u})
        return result

    def __call__(self, x):
        """can on an encoded A⊗A vector."""
        return self.full.apply(x)

    def lift(self, coords):
        """Quotient coordinates -> representative in A⊗A (encoded)."""
        return self.quotient.section(coords)

    def preimage(self, y):
        """can⁻¹ on an encoded A⊗C vector, as a representative in A⊗A."""
        return self.lift(self.inverse.apply(y))

    def relations_report(self):
        report = Report('canonical map of %s' % self.comodule_algebra.name)
        witness = None
        for k, relation in enumerate(self.relations):
            if self.full.apply(relation):
                witness = k
                break
        report.add('can vanishes on the balancing relations', witness is None, witness)
        entry = (self.matrix * self.inverse - SparseMat.identity(self.matrix.nrows, self.matrix.field)).first_entry()
        report.add('can bijective', entry is None, None if entry is None else entry[:2])
        report.data['dims'] = {'A(x)_B A': self.quotient.dim, 'A(x)C': self.dim_a * self.dim_c}
        return report


def canonical_map(ca):
    """
    :rtype: CanonicalMap
    :raises NotGaloisError: with the rank deficit
    """
    return CanonicalMap(ca)


def translation_map(can, c):
    """
    τ(c) = can⁻¹(1 ⊗ c) as a representative in A⊗A (encoded i * dim A + j).
    :type can: CanonicalMap
    :param c: C-vector
    """
    unit = can.comodule_algebra.algebra.unit
    target = {}
    for a, u in six.iteritems(unit):
        for k, v in six.iteritems(c):
            sparse_add(target, {a * can.dim_c + k: u * v})
    return can.preimage(target)


def _balanced(can, legs):
    """True when every C-component of {(c, code): value} vanishes in A ⊗_B A."""
    components = {}
    for (k, code), v in six.iteritems(legs):
        components.setdefault(k, {})[code] = v
    return all(not can.quotient.reduce(vector) for vector in six.itervalues(components))


def check_translation_map(can, entw=None):
    """
    On the basis of C, modulo the balancing relations: right colinearity
    (id ⊗ ρ)τ = (τ ⊗ id)Δ, left colinearity (λ ⊗ id)τ = (id ⊗ τ)Δ, and m τ = ε 1.
    :type can: CanonicalMap
    :rtype: Report
    """
    ca = can.comodule_algebra
    entw = entw or entwining(can)
    algebra, coalgebra = ca.algebra, ca.coalgebra
    one = ca.field.one
    dim_a = can.dim_a
    taus = [translation_map(can, {c: one}) for c in six.moves.range(can.dim_c)]
    right = left = normal = None
    for c, tau in enumerate(taus):
        label = coalgebra.labels[c]
        right_legs, left_legs, product = {}, {}, {}
        for code, v in six.iteritems(tau):
            i, j = divmod(code, dim_a)
            for (j2, k), w in six.iteritems(ca.coaction.get(j, {})):
                sparse_add(right_legs, {(k, i * dim_a + j2): v * w})
            for (k, i2), w in six.iteritems(entw.left_coaction.get(i, {})):
                sparse_add(left_legs, {(k, i2 * dim_a + j): v * w})
            sparse_add(product, algebra.multiply_basis(i, j), v)
        for (c1, c2), v in six.iteritems(coalgebra.comult.get(c, {})):
            for code, u in six.iteritems(taus[c1]):
                sparse_add(right_legs, {(c2, code): -v * u})
            for code, u in six.iteritems(taus[c2]):
                sparse_add(left_legs, {(c1, code): -v * u})
        eps = coalgebra.counit.get(c)
        expected = {a: eps * u for a, u in six.iteritems(algebra.unit)} if eps else {}
        if right is None and not _balanced(can, right_legs):
            right = label
        if left is None and not _balanced(can, left_legs):
            left = label
        if normal is None and product != expected:
            normal = label
    report = Report('translation map of %s' % ca.name)
    report.add('tau right colinear', right is None, right)
    report.add('tau left colinear', left is None, left)
    report.add('m tau = eps 1', normal is None, normal)
    logger.info('translation map of %s: %s', ca.name, 'pass' if report.passed else 'FAIL')
    return report


class Entwining(object):
    """
    ψ: C ⊗ A -> A ⊗ C, ψ(c ⊗ a) = can(τ(c) a), with the left coaction
    λ(a) = ψ⁻¹(a ⊗ e). C⊗A is indexed c * dim A + a.
    """

    def __init__(self, can):
        self.canonical = can
        ca = can.comodule_algebra
        self.comodule_algebra = ca
        field = ca.field
        dim_a, dim_c = can.dim_a, can.dim_c
        algebra = ca.algebra
        columns = {}
        for c in six.moves.range(dim_c):
            tau = translation_map(can, {c: field.one})
            for a in six.moves.range(dim_a):
                moved = {}
                for code, v in six.iteritems(tau):
                    i, j = divmod(code, dim_a)
                    for k, u in six.iteritems(algebra.multiply_basis(j, a)):
                        sparse_add(moved, {i * dim_a + k: v * u})
                columns[c * dim_a + a] = can(moved)
        self.matrix = SparseMat.from_columns(columns, (dim_a * dim_c, dim_c * dim_a), field)
        self.rank = rank(self.matrix)
        if self.rank != dim_a * dim_c:
            raise NotPrincipalError(ca.name, self.rank, dim_a * dim_c)
        self.inverse = inverse(self.matrix)
        logger.info('entwining of %s is bijective', ca.name)

    def psi(self, x):
        return self.matrix.apply(x)

    def psi_inverse(self, x):
        return self.inverse.apply(x)

    def left_coact(self, x):
        """λ on an A-vector, keyed by (c, a)."""
        ca = self.comodule_algebra
        dim_a, dim_c = self.canonical.dim_a, self.canonical.dim_c
        target = {}
        for a, v in six.iteritems(x):
            for c, u in six.iteritems(ca.grouplike):
                sparse_add(target, {a * dim_c + c: v * u})
        return {divmod(code, dim_a): v for code, v in six.iteritems(self.psi_inverse(target))}

    @cached_property
    def left_coaction(self):
        one = self.comodule_algebra.field.one
        return {a: self.left_coact({a: one}) for a in six.moves.range(self.canonical.dim_a)}

    def check(self):
        """Coassociativity and counit of λ."""
        ca = self.comodule_algebra
        coalgebra = ca.coalgebra
        report = Report('left coaction of %s' % ca.name)
        coassoc = counit = None
        one = ca.field.one
        for a, image in sorted(six.iteritems(self.left_coaction)):
            left, right, back = {}, {}, {}
            for (c, b), v in six.iteritems(image):
                for (c1, c2), w in six.iteritems(coalgebra.comult.get(c, {})):
                    sparse_add(left, {(c1, c2, b): v * w})
                for (c2, d), w in six.iteritems(self.left_coaction[b]):
                    sparse_add(right, {(c, c2, d): v * w})
                e = coalgebra.counit.get(c)
                if e:
                    sparse_add(back, {b: v * e})
            if left != right and coassoc is None:
                coassoc = ca.algebra.labels[a]
            if back != {a: one} and counit is None:
                counit = ca.algebra.labels[a]
        report.add('left coaction coassociative', coassoc is None, coassoc)
        report.add('left coaction counital', counit is None, counit)
        return report


def entwining(can):
    """
    :type can: CanonicalMap
    :rtype: Entwining
    :raises NotPrincipalError:
    """
    return Entwining(can)
