# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom.linalg import SparseMat, Subspace, inverse, rank
from cychom.report import Report
from cychom.rowext.errors import NoRightUnitError, NotLeftLinearError, SectionError
from cychom.structures import Algebra
from cychom.structures.algebra import check_algebra
from cychom.tensors import BasedSpace
from cychom.utils import cached_property, sparse_add

__all__ = ('AugmentedModule', 'RowExtension', 'row_extension', 'normalize_cocycle')

logger = logging.getLogger(__name__)


class AugmentedModule(object):
    """
    Left B-module M with a left B-linear augmentation ε: M -> B.
    action[(x, m)] = {m′: c} is b_x · m_m; aug[m] = B-vector ε(m_m).
    """

    def __init__(self, base, module, action, aug, name=None, validate=True):
        self.base = base
        self.module = module
        self.name = name or 'M'
        self.action = {}
        for key, image in six.iteritems(action):
            image = {k: v for k, v in six.iteritems(image) if v}
            if image:
                self.action[key] = image
        self.aug = {m: {k: v for k, v in six.iteritems(vector) if v} for m, vector in six.iteritems(aug)}
        if validate:
            witness = self.linearity_witness()
            if witness is not None:
                raise NotLeftLinearError(self.name, witness=witness)

    @property
    def field(self):
        return self.base.field

    @property
    def dim(self):
        return self.module.dim

    def act(self, b, m):
        """b · m for a B-vector b and an M-vector m."""
        result = {}
        for x, u in six.iteritems(b):
            for k, v in six.iteritems(m):
                image = self.action.get((x, k))
                if image:
                    sparse_add(result, image, u * v)
        return result

    def augment(self, m):
        result = {}
        for k, v in six.iteritems(m):
            sparse_add(result, self.aug.get(k, {}), v)
        return result

    @cached_property
    def aug_matrix(self):
        return SparseMat.from_columns(self.aug, (self.base.dim, self.dim), self.field)

    def linearity_witness(self):
        one = self.field.one
        for x in six.moves.range(self.base.dim):
            for m in six.moves.range(self.dim):
                left = self.augment(self.act({x: one}, {m: one}))
                right = self.base.multiply({x: one}, self.augment({m: one}))
                if left != right:
                    return self.base.labels[x], self.module.labels[m]
        return None

    def module_witness(self):
        """(b_x b_y)·m = b_x·(b_y·m) on basis triples."""
        one = self.field.one
        for x in six.moves.range(self.base.dim):
            for y in six.moves.range(self.base.dim):
                xy = self.base.multiply_basis(x, y)
                for m in six.moves.range(self.dim):
                    if self.act(xy, {m: one}) != self.act({x: one}, self.act({y: one}, {m: one})):
                        return self.base.labels[x], self.base.labels[y], self.module.labels[m]
        return None

    def unitary_witness(self):
        e = self.base.left_unit
        if e is None:
            return 'no left unit'
        one = self.field.one
        for m in six.moves.range(self.dim):
            if self.act(e, {m: one}) != {m: one}:
                return self.module.labels[m]
        return None

    def is_unitary(self):
        return self.unitary_witness() is None

    def __repr__(self):
        return '<AugmentedModule %s over %s>' % (self.name, self.base.name)


class RowExtension(object):
    """
    M with the product m·m′ = ε(m)m′, written in the adapted basis:
    first a basis of I = ker ε, then σ of the basis of B.
    """

    def __init__(self, am, sigma):
        self.augmented = am
        self.base = am.base
        field = am.field
        if rank(am.aug_matrix) != self.base.dim:
            raise SectionError('augmentation is not surjective')
        one = field.one
        for x in six.moves.range(self.base.dim):
            if am.augment(sigma.get(x, {})) != {x: one}:
                raise SectionError('ε σ is not the identity', witness=self.base.labels[x])
        self.sigma = {x: dict(sigma.get(x, {})) for x in six.moves.range(self.base.dim)}
        self.ideal = Subspace.kernel(am.aug_matrix)
        self.ideal_dim = self.ideal.dim
        columns = dict(enumerate(self.ideal.basis))
        for x in six.moves.range(self.base.dim):
            columns[self.ideal_dim + x] = self.sigma[x]
        self.change = SparseMat.from_columns(columns, (am.dim, am.dim), field)
        self.change_inverse = inverse(self.change)
        labels = ['i%d' % k for k in six.moves.range(self.ideal_dim)] + ['s(%s)' % l for l in self.base.labels]
        self.space = BasedSpace(labels, field)
        self.ring = self._build_ring()

    @property
    def field(self):
        return self.base.field

    @property
    def dim(self):
        return self.augmented.dim

    def to_adapted(self, m):
        return self.change_inverse.apply(m)

    def from_adapted(self, v):
        return self.change.apply(v)

    def epsilon(self, v):
        """ε on adapted coordinates."""
        r = self.ideal_dim
        return {k - r: c for k, c in six.iteritems(v) if k >= r}

    @cached_property
    def epsilon_images(self):
        one = self.field.one
        return {self.ideal_dim + x: {x: one} for x in six.moves.range(self.base.dim)}

    def section(self, b):
        """σ on a B-vector, in adapted coordinates."""
        return {self.ideal_dim + x: c for x, c in six.iteritems(b) if c}

    def _build_ring(self):
        am = self.augmented
        one = self.field.one
        mult = {}
        for a in six.moves.range(self.dim):
            eps = self.epsilon({a: one})
            if not eps:
                continue
            for c in six.moves.range(self.dim):
                product = self.to_adapted(am.act(eps, self.from_adapted({c: one})))
                if product:
                    mult[(a, c)] = product
        left_unit = None
        if am.is_unitary():
            left_unit = self.section(self.base.left_unit)
        ring = Algebra(self.space, mult, left_unit=left_unit, name='R(%s)' % am.name)
        logger.info('row extension %s: dim %d, ideal dim %d', ring.name, self.dim, self.ideal_dim)
        return ring

    def cocycle(self, x, y):
        """ω(b_x, b_y) = b_x·σ(b_y) - σ(b_x b_y), adapted coordinates inside I."""
        one = self.field.one
        result = self.ring.multiply(self.section({x: one}), self.section({y: one}))
        sparse_add(result, self.section(self.base.multiply_basis(x, y)), -one)
        return result

    @cached_property
    def cocycle_table(self):
        table = {}
        for x in six.moves.range(self.base.dim):
            for y in six.moves.range(self.base.dim):
                value = self.cocycle(x, y)
                if value:
                    table[(x, y)] = value
        return table

    def is_normalized(self):
        return not self.cocycle_table

    def check_invariants(self):
        """
        I·M = 0, ε multiplicative, σ(e) a left unit for a unitary module.
        :rtype: Report
        """
        one = self.field.one
        ring = self.ring
        report = Report('row extension %s' % ring.name)
        witness = self.augmented.module_witness()
        report.add('B-module', witness is None, witness)
        report.extend(check_algebra(ring), prefix='ring')
        witness = None
        for i in six.moves.range(self.ideal_dim):
            for m in six.moves.range(self.dim):
                if ring.multiply_basis(i, m):
                    witness = witness or (ring.labels[i], ring.labels[m])
        report.add('I.M = 0', witness is None, witness)
        witness = None
        for a in six.moves.range(self.dim):
            for c in six.moves.range(self.dim):
                left = self.epsilon(ring.multiply_basis(a, c))
                right = self.base.multiply(self.epsilon({a: one}), self.epsilon({c: one}))
                if left != right:
                    witness = witness or (ring.labels[a], ring.labels[c])
        report.add('epsilon multiplicative', witness is None, witness)
        if self.augmented.is_unitary():
            e = self.section(self.base.left_unit)
            witness = None
            for m in six.moves.range(self.dim):
                if ring.multiply(e, {m: one}) != {m: one}:
                    witness = witness or ring.labels[m]
            report.add('sigma(e) left unit', witness is None, witness)
        report.data['dim'] = self.dim
        report.data['ideal_dim'] = self.ideal_dim
        report.data['normalized'] = self.is_normalized()
        return report

    def __repr__(self):
        return '<RowExtension of %s, ideal dim %d>' % (self.base.name, self.ideal_dim)


def row_extension(am, sigma):
    """
    :type am: AugmentedModule
    :param sigma: B basis index -> M-vector, a linear section of ε
    :rtype: RowExtension
    """
    return RowExtension(am, sigma)


def normalize_cocycle(re):
    """
    Replaces σ by σ′ = σ - λ with λ(j) = -ω(j, e) for a right unit e of B.
    The identity of M read in the two adapted bases is the automorphism
    (i, j) -> (i + λ(j), j); it is checked to intertwine the products.
    :rtype: tuple (RowExtension, SparseMat, Report)
    :raises NoRightUnitError:
    """
    base = re.base
    e = base.right_unit
    if e is None:
        raise NoRightUnitError(base.name)
    one = re.field.one
    r = re.ideal_dim

    def lam(x):
        result = {}
        for y, c in six.iteritems(e):
            sparse_add(result, re.cocycle(x, y), -c)
        return result

    lambdas = {x: lam(x) for x in six.moves.range(base.dim)}
    sigma = {}
    for x in six.moves.range(base.dim):
        sigma[x] = sparse_add(dict(re.sigma[x]), re.from_adapted(lambdas[x]), -one)
    normalized = RowExtension(re.augmented, sigma)
    automorphism = normalized.change_inverse * re.change

    report = Report('normalize cocycle of %s' % re.ring.name)
    witness = None
    for (x, y) in sorted(re.cocycle_table):
        # ω(x, y) = x·λ(y) - λ(xy), right action of B on I being zero
        expected = re.ring.multiply(re.section({x: one}), lambdas[y])
        for z, c in six.iteritems(base.multiply_basis(x, y)):
            sparse_add(expected, lambdas[z], -c)
        if expected != re.cocycle_table[(x, y)]:
            witness = witness or (base.labels[x], base.labels[y])
    report.add('cocycle is the coboundary of lambda', witness is None, witness)
    report.add('normalized cocycle vanishes', normalized.is_normalized(),
               None if normalized.is_normalized() else sorted(normalized.cocycle_table)[0])
    witness = None
    for a in six.moves.range(re.dim):
        for c in six.moves.range(re.dim):
            left = automorphism.apply(re.ring.multiply_basis(a, c))
            right = normalized.ring.multiply(automorphism.column(a), automorphism.column(c))
            if left != right:
                witness = witness or (re.ring.labels[a], re.ring.labels[c])
    report.add('automorphism multiplicative', witness is None, witness)
    for k in six.moves.range(r):
        if automorphism.column(k) != {k: one}:
            report.add('automorphism fixes I', False, re.ring.labels[k])
            break
    else:
        report.add('automorphism fixes I', True)
    report.data['lambda'] = {base.labels[x]: re.ring.format(v) for x, v in sorted(six.iteritems(lambdas)) if v}
    logger.info('normalized cocycle of %s: %s', re.ring.name, 'pass' if report.passed else 'FAIL')
    return normalized, automorphism, report
