# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom.linalg import SparseMat, solve_affine
from cychom.report import Report
from cychom.structures.errors import NonAssociativeError, UnitError
from cychom.utils import cached_property, sparse_add

__all__ = ('Algebra', 'check_algebra')

logger = logging.getLogger(__name__)


class Algebra(object):
    """
    Finite-dimensional associative, possibly non-unital algebra given by
    structure constants: mult[(i, j)] = {k: c} means e_i e_j = sum c e_k.
    """

    def __init__(self, space, mult, left_unit=None, name=None, validate=True):
        self.space = space
        self.name = name or 'A'
        self.mult = {}
        for (i, j), product in six.iteritems(mult):
            product = {k: v for k, v in six.iteritems(product) if v}
            if product:
                self.mult[(i, j)] = product
        self._declared_left_unit = dict(left_unit) if left_unit is not None else None
        if validate:
            witness = self.associativity_witness()
            if witness is not None:
                raise NonAssociativeError(self.name, witness=witness)
            if self._declared_left_unit is not None:
                witness = self._left_unit_witness(self._declared_left_unit)
                if witness is not None:
                    raise UnitError(self.name, witness=witness)

    @property
    def field(self):
        return self.space.field

    @property
    def dim(self):
        return self.space.dim

    @property
    def labels(self):
        return self.space.labels

    def multiply_basis(self, i, j):
        return self.mult.get((i, j), {})

    def multiply(self, x, y):
        result = {}
        for i, a in six.iteritems(x):
            for j, b in six.iteritems(y):
                product = self.mult.get((i, j))
                if product:
                    sparse_add(result, product, a * b)
        return result

    def power(self, x, n):
        result = x
        for _ in six.moves.range(n - 1):
            result = self.multiply(result, x)
        return result

    def associativity_witness(self):
        dim = self.dim
        for i in six.moves.range(dim):
            for j in six.moves.range(dim):
                ij = self.multiply_basis(i, j)
                for k in six.moves.range(dim):
                    left = self.multiply(ij, {k: self.field.one})
                    right = self.multiply({i: self.field.one}, self.multiply_basis(j, k))
                    if left != right:
                        return tuple(self.labels[x] for x in (i, j, k))
        return None

    def _left_unit_witness(self, e):
        for a in six.moves.range(self.dim):
            if self.multiply(e, {a: self.field.one}) != {a: self.field.one}:
                return self.labels[a]
        return None

    def left_multiplication_matrix(self, x):
        columns = {j: self.multiply(x, {j: self.field.one}) for j in six.moves.range(self.dim)}
        return SparseMat.from_columns(columns, (self.dim, self.dim), self.field)

    def _unit_system(self, left=True, right=True):
        # unknown e = sum x_i e_i; rows indexed by (side, j, k)
        dim, one = self.dim, self.field.one
        rows, rhs, r = {}, {}, 0
        sides = [s for s, on in (('left', left), ('right', right)) if on]
        for side in sides:
            for j in six.moves.range(dim):
                for k in six.moves.range(dim):
                    row = {}
                    for i in six.moves.range(dim):
                        product = self.multiply_basis(i, j) if side == 'left' else self.multiply_basis(j, i)
                        v = product.get(k)
                        if v:
                            row[i] = v
                    if row:
                        rows[r] = row
                    if j == k:
                        rhs[r] = one
                    r += 1
        return SparseMat(rows, (r, dim), self.field), rhs

    def _solve_unit(self, left, right):
        if not self.dim:
            return None
        m, rhs = self._unit_system(left, right)
        solution = solve_affine(m, rhs)
        return None if solution is None else solution[0]

    @cached_property
    def unit(self):
        """Two-sided unit, or None."""
        return self._solve_unit(True, True)

    @cached_property
    def right_unit(self):
        return self._solve_unit(False, True)

    @cached_property
    def left_unit(self):
        if self._declared_left_unit is not None:
            return self._declared_left_unit
        if self.unit is not None:
            return self.unit
        return self._solve_unit(True, False)

    @property
    def is_unital(self):
        return self.unit is not None

    def is_commutative(self):
        return all(self.multiply_basis(i, j) == self.multiply_basis(j, i)
                   for i in six.moves.range(self.dim) for j in six.moves.range(i + 1, self.dim))

    def format(self, vector):
        return self.space.format(vector)

    def __repr__(self):
        return '<Algebra %s of dimension %d>' % (self.name, self.dim)


def check_algebra(alg):
    """
    Associativity on all basis triples and unit detection.
    Failures are report content.
    :type alg: Algebra
    :rtype: Report
    """
    report = Report('algebra %s' % alg.name)
    report.add('associativity', *_passed(alg.associativity_witness()))
    if alg._declared_left_unit is not None:
        report.add('declared left unit', *_passed(alg._left_unit_witness(alg._declared_left_unit)))
    units = {
        'unit': alg.unit,
        'left_unit': alg.left_unit,
        'right_unit': alg.right_unit,
    }
    report.data['dim'] = alg.dim
    for key, value in six.iteritems(units):
        report.data[key] = None if value is None else alg.format(value)
    report.data['unital'] = alg.unit is not None
    report.data['left_unital'] = alg.left_unit is not None
    report.data['right_unital'] = alg.right_unit is not None
    logger.info('checked algebra %s: associative=%s unital=%s', alg.name, report.passed, report.data['unital'])
    return report


def _passed(witness):
    return witness is None, witness
