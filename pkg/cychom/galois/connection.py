# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom.galois.canonical import canonical_map, entwining
from cychom.galois.errors import NoStrongConnectionError
from cychom.linalg import SparseMat, solve_affine
from cychom.report import Report
from cychom.utils import sparse_add

__all__ = ('ConnectionSystem', 'StrongConnection', 'solve_strong_connection')

logger = logging.getLogger(__name__)

CONDITIONS = ('lifting', 'right colinearity', 'left colinearity', 'unitality')


class ConnectionSystem(object):
    """
    Linear conditions on ℓ: C -> A ⊗ A, ℓ given as a table c_k -> encoded A⊗A vector:
    lifting (a ⊗ a′ -> a a′(0) ⊗ a′(1)) ℓ = 1 ⊗ (-), right colinearity
    (id ⊗ ρ)ℓ = (ℓ ⊗ id)Δ, left colinearity (λ ⊗ id)ℓ = (id ⊗ ℓ)Δ and
    optionally ℓ(e) = 1 ⊗ 1.
    """

    def __init__(self, ca, can=None, entw=None, unital=True):
        self.comodule_algebra = ca
        self.canonical = can or canonical_map(ca)
        self.entwining = entw or entwining(self.canonical)
        self.unital = unital
        da, dc = ca.algebra.dim, ca.coalgebra.dim
        self.dim_a, self.dim_c = da, dc
        self.sizes = (dc * da * dc, dc * da * da * dc, dc * dc * da * da, da * da if unital else 0)
        self.offsets = tuple(sum(self.sizes[:k]) for k in six.moves.range(4))
        self.nrows = sum(self.sizes)
        self.nunknowns = dc * da * da

    def block_of(self, row):
        for k in six.moves.range(3, -1, -1):
            if self.sizes[k] and row >= self.offsets[k]:
                return CONDITIONS[k]

    def linear_part(self, table):
        """Left minus right hand sides, without the constant terms."""
        ca = self.comodule_algebra
        da, dc = self.dim_a, self.dim_c
        comult = ca.coalgebra.comult
        left_coaction = self.entwining.left_coaction
        o = self.offsets
        rows = {}
        for k in six.moves.range(dc):
            ell = table.get(k, {})
            for code, v in six.iteritems(self.canonical(ell)):
                sparse_add(rows, {o[0] + k * da * dc + code: v})
            for code, v in six.iteritems(ell):
                i, j = divmod(code, da)
                for (j2, c), w in six.iteritems(ca.coaction.get(j, {})):
                    sparse_add(rows, {o[1] + k * da * da * dc + (i * da + j2) * dc + c: v * w})
                for (c, i2), w in six.iteritems(left_coaction.get(i, {})):
                    sparse_add(rows, {o[2] + k * dc * da * da + (c * da + i2) * da + j: v * w})
            for (k1, k2), v in six.iteritems(comult.get(k, {})):
                for code, u in six.iteritems(table.get(k1, {})):
                    sparse_add(rows, {o[1] + k * da * da * dc + code * dc + k2: -v * u})
                for code, u in six.iteritems(table.get(k2, {})):
                    sparse_add(rows, {o[2] + k * dc * da * da + k1 * da * da + code: -v * u})
        if self.unital:
            for k, e in six.iteritems(ca.grouplike):
                for code, v in six.iteritems(table.get(k, {})):
                    sparse_add(rows, {o[3] + code: e * v})
        return rows

    def constant_part(self):
        ca = self.comodule_algebra
        da, dc = self.dim_a, self.dim_c
        unit = ca.algebra.unit
        rows = {}
        for k in six.moves.range(dc):
            for a, u in six.iteritems(unit):
                rows[self.offsets[0] + k * da * dc + a * dc + k] = u
        if self.unital:
            for i, u in six.iteritems(unit):
                for j, v in six.iteritems(unit):
                    rows[self.offsets[3] + i * da + j] = u * v
        return rows

    def matrix(self):
        one = self.comodule_algebra.field.one
        da2 = self.dim_a * self.dim_a
        columns = {}
        for u in six.moves.range(self.nunknowns):
            k, code = divmod(u, da2)
            columns[u] = self.linear_part({k: {code: one}})
        return SparseMat.from_columns(columns, (self.nrows, self.nunknowns), self.comodule_algebra.field)

    def table_from_unknowns(self, vector):
        da2 = self.dim_a * self.dim_a
        table = {}
        for u, v in six.iteritems(vector):
            k, code = divmod(u, da2)
            table.setdefault(k, {})[code] = v
        return table

    def residual(self, table):
        return sparse_add(self.linear_part(table), self.constant_part(), -self.comodule_algebra.field.one)


class StrongConnection(object):
    """
    Solved ℓ: C -> A ⊗ A with the affine family of the other solutions of the same system.
    """

    def __init__(self, system, table, family=None):
        self.system = system
        self.table = {k: {code: v for code, v in six.iteritems(vector) if v} for k, vector in six.iteritems(table)}
        self.family = list(family or [])

    @property
    def comodule_algebra(self):
        return self.system.comodule_algebra

    @property
    def canonical(self):
        return self.system.canonical

    @property
    def entwining(self):
        return self.system.entwining

    @property
    def dim_a(self):
        return self.system.dim_a

    def __call__(self, c):
        """ℓ on a C-vector, encoded i * dim A + j."""
        result = {}
        for k, v in six.iteritems(c):
            sparse_add(result, self.table.get(k, {}), v)
        return result

    def terms(self, k):
        """ℓ(c_k) as {(i, j): coefficient}."""
        return {divmod(code, self.dim_a): v for code, v in six.iteritems(self.table.get(k, {}))}

    def shifted(self, coefficients):
        """Solution particular + Σ coefficients[s] * family[s]."""
        field = self.comodule_algebra.field
        unknowns = {}
        da2 = self.dim_a * self.dim_a
        for k, vector in six.iteritems(self.table):
            for code, v in six.iteritems(vector):
                unknowns[k * da2 + code] = v
        for s, c in enumerate(coefficients):
            if c:
                sparse_add(unknowns, self.family[s], field(c))
        return StrongConnection(self.system, self.system.table_from_unknowns(unknowns), self.family)

    def is_unital(self):
        ca = self.comodule_algebra
        unit = ca.algebra.unit
        expected = {i * self.dim_a + j: u * v for i, u in six.iteritems(unit) for j, v in six.iteritems(unit)}
        return self(ca.grouplike) == {k: v for k, v in six.iteritems(expected) if v}

    def normalization_witness(self):
        """m(ℓ(c)) = ε(c)·1 on the basis of C."""
        ca = self.comodule_algebra
        algebra = ca.algebra
        for k in six.moves.range(ca.coalgebra.dim):
            product = {}
            for (i, j), v in six.iteritems(self.terms(k)):
                sparse_add(product, algebra.multiply_basis(i, j), v)
            eps = ca.coalgebra.counit.get(k)
            expected = {a: eps * u for a, u in six.iteritems(algebra.unit)} if eps else {}
            if product != expected:
                return ca.coalgebra.labels[k]
        return None

    def check(self):
        """
        :rtype: Report
        """
        residual = self.system.residual(self.table)
        failing = {}
        for row in sorted(residual):
            failing.setdefault(self.system.block_of(row), row)
        report = Report('strong connection on %s' % self.comodule_algebra.name)
        for k, name in enumerate(CONDITIONS):
            if self.system.sizes[k]:
                report.add(name, name not in failing, failing.get(name))
        witness = self.normalization_witness()
        report.add('m l = eps 1', witness is None, witness)
        report.data['unital'] = self.is_unital()
        report.data['family_dim'] = len(self.family)
        return report

    def format(self):
        ca = self.comodule_algebra
        labels = ca.algebra.labels
        field = ca.field
        lines = []
        for k in six.moves.range(ca.coalgebra.dim):
            parts = ['%s*%s(x)%s' % (field.to_str(v), labels[i], labels[j])
                     for (i, j), v in sorted(self.terms(k).items())]
            lines.append('l(%s) = %s' % (ca.coalgebra.labels[k], ' + '.join(parts) or '0'))
        return lines


def solve_strong_connection(ca, unital=True, can=None, entw=None):
    """
    One exact solution (free unknowns zero) of the strong connection system.
    :type ca: cychom.galois.ComoduleAlgebra
    :rtype: StrongConnection
    :raises NoStrongConnectionError:
    """
    system = ConnectionSystem(ca, can=can, entw=entw, unital=unital)
    solution = solve_affine(system.matrix(), system.constant_part())
    if solution is None:
        raise NoStrongConnectionError(ca.name)
    particular, family = solution
    connection = StrongConnection(system, system.table_from_unknowns(particular), family)
    logger.info('strong connection on %s solved, affine family of dimension %d', ca.name, len(family))
    return connection
