# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom.homology.errors import NotACycleError
from cychom.linalg import SparseMat, rank, solve_affine
from cychom.report import Report
from cychom.utils import sparse_add

__all__ = ('ChainComplex', 'GradedMap', 'ChainMap', 'Homotopy', 'homology_dims', 'homologous', 'matrix_witness')

logger = logging.getLogger(__name__)


def matrix_witness(difference):
    """
    First nonzero entry of a matrix that should vanish, as (row, column), or None.
    :type difference: SparseMat
    """
    entry = difference.first_entry()
    if entry is None:
        return None
    return entry[0], entry[1]


class ChainComplex(object):
    """
    Finite chain complex of based vector spaces C_0 .. C_top with
    d_n: C_n -> C_{n-1}. Homology is exact through max_degree, which must
    leave room for d_{max_degree + 1}.
    """

    def __init__(self, dims, differentials=None, field=None, max_degree=None, name=None):
        self.dims = list(dims)
        self.field = field
        self.name = name or 'C'
        self._differentials = dict(differentials or {})
        self._ranks = {}
        self.max_degree = self.top if max_degree is None else max_degree

    @property
    def top(self):
        return len(self.dims) - 1

    def dim(self, n):
        if n < 0 or n > self.top:
            return 0
        return self.dims[n]

    def _build_differential(self, n):
        return self._differentials.get(n)

    def d(self, n):
        """
        :rtype: SparseMat of shape (dim(n - 1), dim(n))
        """
        m = self._differentials.get(n)
        if m is None:
            m = self._build_differential(n) if 0 < n <= self.top else None
            if m is None:
                m = SparseMat.zeros((self.dim(n - 1), self.dim(n)), self.field)
            self._differentials[n] = m
        return m

    def rank(self, n):
        if n not in self._ranks:
            self._ranks[n] = rank(self.d(n))
        return self._ranks[n]

    def boundary(self, n, vector):
        return self.d(n).apply(vector)

    def is_cycle(self, n, vector):
        return not self.boundary(n, vector)

    def check_d_squared(self):
        report = Report('d² = 0 on %s' % self.name)
        for n in six.moves.range(2, self.top + 1):
            report.add('degree %d' % n, *_passed(matrix_witness(self.d(n - 1) * self.d(n))))
        return report

    def __repr__(self):
        return '<ChainComplex %s dims=%s>' % (self.name, self.dims)


class GradedMap(object):
    """
    Family of matrices f_n: source_n -> target_{n + degree}, missing degrees are zero.
    """

    degree = 0

    def __init__(self, source, target, maps=None):
        self.source = source
        self.target = target
        self.maps = dict(maps or {})

    def __getitem__(self, n):
        m = self.maps.get(n)
        if m is None:
            m = SparseMat.zeros((self.target.dim(n + self.degree), self.source.dim(n)), self.source.field)
        return m

    def __call__(self, n, vector):
        return self[n].apply(vector)

    def degrees(self):
        return sorted(self.maps)


class ChainMap(GradedMap):

    def compose(self, other):
        """self after other"""
        maps = {n: self[n] * other[n] for n in other.degrees() if n in self.maps}
        return ChainMap(other.source, self.target, maps)

    def commutation_report(self, top=None):
        top = min(self.source.top, self.target.top) if top is None else top
        report = Report('chain map')
        for n in six.moves.range(1, top + 1):
            difference = self.target.d(n) * self[n] - self[n - 1] * self.source.d(n)
            report.add('d f = f d in degree %d' % n, *_passed(matrix_witness(difference)))
        return report


class Homotopy(GradedMap):
    degree = 1

    def identity_report(self, difference, top, name='dh + hd'):
        """
        Checks d h + h d = difference_n for n <= top on an endo-homotopy.
        :param difference: callable n -> SparseMat
        """
        c = self.source
        report = Report(name)
        for n in six.moves.range(0, top + 1):
            dh = c.d(n + 1) * self[n]
            hd = self[n - 1] * c.d(n) if n > 0 else None
            total = dh + hd if hd is not None else dh
            report.add('%s in degree %d' % (name, n), *_passed(matrix_witness(total - difference(n))))
        return report


def homology_dims(c, max_degree=None):
    """
    dim H_n = dim C_n - rank d_n - rank d_{n+1}, for n = 0 .. max_degree.
    :type c: ChainComplex
    :rtype: list
    """
    max_degree = c.max_degree if max_degree is None else max_degree
    dims = []
    for n in six.moves.range(0, max_degree + 1):
        dims.append(c.dim(n) - c.rank(n) - c.rank(n + 1))
    logger.info('homology of %s through degree %d: %s', c.name, max_degree, dims)
    return dims


def homologous(c, n, x, y):
    """
    Preimage z of x - y under d_{n+1}, or None when the cycles are not homologous.
    :type c: ChainComplex
    :raises NotACycleError: when x or y is not a cycle
    """
    for vector in (x, y):
        boundary = c.boundary(n, vector)
        if boundary:
            raise NotACycleError(n, witness=min(boundary))
    difference = sparse_add(dict(x), y, -c.field.one)
    if not difference:
        return {}
    solution = solve_affine(c.d(n + 1), difference)
    if solution is None:
        return None
    return solution[0]


def _passed(witness):
    return witness is None, witness
