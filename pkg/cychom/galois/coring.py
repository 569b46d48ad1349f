# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom.galois.errors import NotHopfError, RowIsoError, SectionNotInCotensorError
from cychom.linalg import SparseMat, Subspace, rank
from cychom.linalg.errors import NotInSubspaceError
from cychom.report import Report
from cychom.rowext import AugmentedModule, row_extension
from cychom.tensors import BasedSpace
from cychom.utils import cached_property, sparse_add

__all__ = ('cotensor', 'ESCoring', 'es_coring', 'RowIsomorphism', 'row_iso_omega')

logger = logging.getLogger(__name__)


def cotensor(ca, entw):
    """
    M = A □^C A = ker(ρ ⊗ id - id ⊗ λ) inside A⊗A (encoded i * dim A + j);
    the target A⊗C⊗A is indexed (a * dim C + c) * dim A + b.
    :type entw: cychom.galois.Entwining
    :rtype: Subspace
    """
    da, dc = ca.algebra.dim, ca.coalgebra.dim
    columns = {}
    for i in six.moves.range(da):
        for j in six.moves.range(da):
            column = {}
            for (a, c), v in six.iteritems(ca.coaction.get(i, {})):
                sparse_add(column, {(a * dc + c) * da + j: v})
            for (c, b), v in six.iteritems(entw.left_coaction.get(j, {})):
                sparse_add(column, {(i * dc + c) * da + b: -v})
            columns[i * da + j] = column
    m = SparseMat.from_columns(columns, (da * dc * da, da * da), ca.field)
    subspace = Subspace.kernel(m)
    logger.info('cotensor product of %s: dimension %d', ca.name, subspace.dim)
    return subspace


class ESCoring(object):
    """
    The coring M = A □^C A over B: ε_M(x ⊗ y) = xy and
    Δ_M(x ⊗ y) = x(0) ⊗ ℓ(x(1)) ⊗ y, the values lifted from (A⊗A)⊗(A⊗A) to M⊗M.
    """

    def __init__(self, ca, connection):
        self.connection = connection
        self.comodule_algebra = ca
        self.base = connection.canonical.base
        self.dim_a = ca.algebra.dim
        self.space = cotensor(ca, connection.entwining)
        self.labels = ['m%d' % s for s in six.moves.range(self.space.dim)]

    @property
    def field(self):
        return self.comodule_algebra.field

    @property
    def dim(self):
        return self.space.dim

    def basis_terms(self, s):
        """Basis element m_s as {(x, y): coefficient}."""
        return {divmod(code, self.dim_a): v for code, v in six.iteritems(self.space.basis[s])}

    def _terms(self, m):
        result = {}
        for s, v in six.iteritems(m):
            sparse_add(result, self.basis_terms(s), v)
        return result

    def _product(self, x, y):
        return self.comodule_algebra.algebra.multiply_basis(x, y)

    def counit_in_a(self, m):
        """Σ xy as an A-vector."""
        result = {}
        for (x, y), v in six.iteritems(self._terms(m)):
            sparse_add(result, self._product(x, y), v)
        return result

    def counit(self, m):
        """ε_M on M-coordinates, as a B-vector."""
        return self.base.coordinates(self.counit_in_a(m))

    def comultiply_terms(self, terms):
        """x ⊗ y -> x(0) ⊗ ℓ(x(1)) ⊗ y on {(x, y): v}, keyed by 4-tuples."""
        ca = self.comodule_algebra
        result = {}
        for (x, y), v in six.iteritems(terms):
            for (x0, c), w in six.iteritems(ca.coaction.get(x, {})):
                for (l1, l2), u in six.iteritems(self.connection.terms(c)):
                    sparse_add(result, {(x0, l1, l2, y): v * w * u})
        return result

    def comultiply_tensor(self, m):
        return self.comultiply_terms(self._terms(m))

    def lift_pair(self, tensor):
        """
        (A⊗A)⊗(A⊗A) element, keyed by 4-tuples, to M⊗M coordinates {(s, t): v}.
        :raises NotInSubspaceError: when the element is not in M⊗M
        """
        position = {j: k for k, j in enumerate(self.space.free)}
        da = self.dim_a
        coords = {}
        for (p, q, r, s), v in six.iteritems(tensor):
            first, second = position.get(p * da + q), position.get(r * da + s)
            if first is not None and second is not None:
                coords[(first, second)] = v
        rebuilt = {}
        for (first, second), v in six.iteritems(coords):
            for (p, q), u in six.iteritems(self.basis_terms(first)):
                for (r, s), w in six.iteritems(self.basis_terms(second)):
                    sparse_add(rebuilt, {(p, q, r, s): v * u * w})
        diff = sparse_add(rebuilt, tensor, -self.field.one)
        if diff:
            raise NotInSubspaceError(self.dim * self.dim, witness=min(diff))
        return coords

    def comultiply(self, m):
        """Δ_M on M-coordinates, as M⊗M coordinates {(s, t): v}."""
        return self.lift_pair(self.comultiply_tensor(m))

    def act(self, b, m):
        """b · (x ⊗ y) = bx ⊗ y for a B-vector b."""
        algebra = self.comodule_algebra.algebra
        embedded = self.base.embed(b)
        result = {}
        for (x, y), v in six.iteritems(self._terms(m)):
            for z, w in six.iteritems(algebra.multiply(embedded, {x: self.field.one})):
                sparse_add(result, {z * self.dim_a + y: v * w})
        return self.space.coordinates(result)

    def splitting(self, b):
        """σ(b) = b ⊗ 1 in M-coordinates."""
        ca = self.comodule_algebra
        unit = ca.algebra.unit
        vector = {}
        for x, v in six.iteritems(self.base.embed(b)):
            for y, u in six.iteritems(unit):
                sparse_add(vector, {x * self.dim_a + y: v * u})
        try:
            return self.space.coordinates(vector)
        except NotInSubspaceError as e:
            raise SectionNotInCotensorError(ca.name, witness=e.witness)

    @cached_property
    def augmented_module(self):
        base = self.base.algebra
        one = self.field.one
        action, aug = {}, {}
        for s in six.moves.range(self.dim):
            aug[s] = self.counit({s: one})
            for x in six.moves.range(base.dim):
                action[(x, s)] = self.act({x: one}, {s: one})
        module = BasedSpace(self.labels, self.field)
        return AugmentedModule(base, module, action, aug, name='M(%s)' % self.comodule_algebra.name)

    @cached_property
    def sigma(self):
        one = self.field.one
        return {x: self.splitting({x: one}) for x in six.moves.range(self.base.dim)}

    @cached_property
    def row_extension(self):
        """
        :rtype: cychom.rowext.RowExtension
        """
        return row_extension(self.augmented_module, self.sigma)

    def _counit_witnesses(self):
        algebra = self.comodule_algebra.algebra
        one = self.field.one
        left = right = None
        for s in six.moves.range(self.dim):
            expected = self.basis_terms(s)
            left_side, right_side = {}, {}
            for (p, q, r, t), v in six.iteritems(self.comultiply_tensor({s: one})):
                for z, u in six.iteritems(algebra.multiply(algebra.multiply_basis(p, q), {r: one})):
                    sparse_add(left_side, {(z, t): v * u})
                for z, u in six.iteritems(algebra.multiply({q: one}, algebra.multiply_basis(r, t))):
                    sparse_add(right_side, {(p, z): v * u})
            if left_side != expected and left is None:
                left = self.labels[s]
            if right_side != expected and right is None:
                right = self.labels[s]
        return left, right

    def _coassociativity_witness(self):
        one = self.field.one
        for s in six.moves.range(self.dim):
            twice = self.comultiply_tensor({s: one})
            left, right = {}, {}
            for (p, q, r, t), v in six.iteritems(twice):
                for key, u in six.iteritems(self.comultiply_terms({(p, q): one})):
                    sparse_add(left, {key + (r, t): v * u})
                for key, u in six.iteritems(self.comultiply_terms({(r, t): one})):
                    sparse_add(right, {(p, q) + key: v * u})
            if left != right:
                return self.labels[s]
        return None

    def closure_witness(self):
        """Pair of basis elements whose product in A ⊗ A^op leaves M, or None."""
        da = self.dim_a
        for s in six.moves.range(self.dim):
            for t in six.moves.range(self.dim):
                product = {}
                for (x, y), v in six.iteritems(self.basis_terms(s)):
                    for (x2, y2), w in six.iteritems(self.basis_terms(t)):
                        for p, u in six.iteritems(self._product(x, x2)):
                            for q, z in six.iteritems(self._product(y2, y)):
                                sparse_add(product, {p * da + q: v * w * u * z})
                if not self.space.contains(product):
                    return self.labels[s], self.labels[t]
        return None

    def check(self):
        """
        :rtype: Report
        """
        one = self.field.one
        report = Report('Ehresmann-Schauenburg coring of %s' % self.comodule_algebra.name)
        witness = None
        for s in six.moves.range(self.dim):
            try:
                self.counit({s: one})
            except NotInSubspaceError:
                witness = self.labels[s]
                break
        report.add('counit lands in B', witness is None, witness)
        witness = None
        for s in six.moves.range(self.dim):
            try:
                self.comultiply({s: one})
            except NotInSubspaceError:
                witness = self.labels[s]
                break
        report.add('comultiplication lands in M(x)M', witness is None, witness)
        left, right = self._counit_witnesses()
        report.add('left counit', left is None, left)
        report.add('right counit', right is None, right)
        witness = self._coassociativity_witness()
        report.add('coassociativity', witness is None, witness)
        witness = None
        for x, m in sorted(six.iteritems(self.sigma)):
            if self.counit(m) != {x: one}:
                witness = self.base.algebra.labels[x]
                break
        report.add('counit of sigma is the identity', witness is None, witness)
        if self.comodule_algebra.hopf is not None:
            witness = self.closure_witness()
            report.add('M closed in A(x)A^op', witness is None, witness)
        report.data['dims'] = {'M': self.dim, 'B': self.base.dim, 'I': self.dim - self.base.dim}
        return report

    def __repr__(self):
        return '<ESCoring of %s, dim %d>' % (self.comodule_algebra.name, self.dim)


def es_coring(ca, connection):
    """
    :type connection: cychom.galois.StrongConnection
    :rtype: ESCoring
    """
    return ESCoring(ca, connection)


class RowIsomorphism(object):
    """
    M -> B ⊕ Ω¹(A)^{coH}, Σ x ⊗ y -> (Σ xy, Σ x ⊗ y - xy ⊗ 1), the target read
    as the first row of a block matrix [[B, Ω],[0, 0]].
    """

    def __init__(self, es):
        ca = es.comodule_algebra
        if ca.hopf is None:
            raise NotHopfError(ca.name)
        self.coring = es
        self.omega = self._omega()
        self.dims = (es.base.dim, self.omega.dim)
        columns = {}
        one = es.field.one
        for s in six.moves.range(es.dim):
            columns[s] = self.image({s: one})
        self.matrix = SparseMat.from_columns(columns, (sum(self.dims), es.dim), es.field)
        self.rank = rank(self.matrix)
        if not self.is_bijective():
            raise RowIsoError(ca.name, 'not bijective', witness={'rank': self.rank, 'dims': self.dims})
        witness = self.multiplicativity_witness()
        if witness is not None:
            raise RowIsoError(ca.name, 'not multiplicative', witness=witness)
        logger.info('row isomorphism of %s: blocks %s', ca.name, self.dims)

    def is_bijective(self):
        return self.rank == self.coring.dim == sum(self.dims)

    def _omega(self):
        """ker(mult) ∩ invariants of x ⊗ y -> x(0) ⊗ y(0) ⊗ x(1)y(1), inside A⊗A."""
        es = self.coring
        ca = es.comodule_algebra
        h = ca.hopf.algebra
        algebra = ca.algebra
        da, dh = algebra.dim, ca.coalgebra.dim
        offset = da
        columns = {}
        for i in six.moves.range(da):
            for j in six.moves.range(da):
                column = dict(algebra.multiply_basis(i, j))
                for (x0, c), u in six.iteritems(ca.coaction.get(i, {})):
                    for (y0, d), v in six.iteritems(ca.coaction.get(j, {})):
                        for z, w in six.iteritems(h.multiply_basis(c, d)):
                            sparse_add(column, {offset + (x0 * da + y0) * dh + z: u * v * w})
                for g, v in six.iteritems(ca.grouplike):
                    sparse_add(column, {offset + (i * da + j) * dh + g: -v})
                columns[i * da + j] = column
        m = SparseMat.from_columns(columns, (da + da * da * dh, da * da), es.field)
        return Subspace.kernel(m)

    def image(self, m):
        es = self.coring
        algebra = es.comodule_algebra.algebra
        da = es.dim_a
        product = es.counit_in_a(m)
        form = {}
        for (x, y), v in six.iteritems(es._terms(m)):
            sparse_add(form, {x * da + y: v})
        for z, v in six.iteritems(product):
            for y, u in six.iteritems(algebra.unit):
                sparse_add(form, {z * da + y: -v * u})
        result = dict(es.base.coordinates(product))
        for k, v in six.iteritems(self.omega.coordinates(form)):
            result[self.dims[0] + k] = v
        return result

    def block_product(self, left, right):
        """[[b, ω]]·[[b′, ω′]] = [[bb′, bω′]], B acting on Ω through the first factor."""
        es = self.coring
        algebra = es.comodule_algebra.algebra
        da = es.dim_a
        r = self.dims[0]
        b = {k: v for k, v in six.iteritems(left) if k < r}
        b2 = {k: v for k, v in six.iteritems(right) if k < r}
        omega2 = self.omega.embed({k - r: v for k, v in six.iteritems(right) if k >= r})
        result = dict(es.base.algebra.multiply(b, b2))
        embedded = es.base.embed(b)
        moved = {}
        for code, v in six.iteritems(omega2):
            x, y = divmod(code, da)
            for z, u in six.iteritems(algebra.multiply(embedded, {x: es.field.one})):
                sparse_add(moved, {z * da + y: v * u})
        for k, v in six.iteritems(self.omega.coordinates(moved)):
            result[r + k] = v
        return result

    def multiplicativity_witness(self):
        """φ(m m′) = φ(m)φ(m′) for the ε-product m m′ = ε(m)·m′."""
        es = self.coring
        one = es.field.one
        for s in six.moves.range(es.dim):
            for t in six.moves.range(es.dim):
                product = es.act(es.counit({s: one}), {t: one})
                if self.image(product) != self.block_product(self.image({s: one}), self.image({t: one})):
                    return es.labels[s], es.labels[t]
        return None

    def report(self):
        report = Report('block matrix form of %s' % self.coring.comodule_algebra.name)
        witness = None if self.is_bijective() else {'rank': self.rank, 'dims': list(self.dims)}
        report.add('bijective', witness is None, witness)
        witness = self.multiplicativity_witness()
        report.add('multiplicative', witness is None, witness)
        report.data['blocks'] = list(self.dims)
        return report


def row_iso_omega(es):
    """
    :type es: ESCoring
    :rtype: RowIsomorphism
    :raises NotHopfError: without a Hopf algebra
    :raises RowIsoError:
    """
    return RowIsomorphism(es)
