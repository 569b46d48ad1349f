# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six
from sympy.polys.matrices.sdm import SDM

from cychom.linalg.errors import ShapeError
from cychom.utils import cached_property

__all__ = ('SparseMat',)


class SparseMat(object):
    """
    Exact sparse matrix over a Field, stored row-wise in a sympy SDM.
    No stored entry is zero.
    """

    def __init__(self, rows, shape, field):
        m, n = shape
        clean = {}
        for i, row in six.iteritems(rows):
            r = {j: v for j, v in six.iteritems(row) if v}
            if not r:
                continue
            if not 0 <= i < m or not all(0 <= j < n for j in r):
                raise ShapeError(shape, (i, max(r)), 'entries')
            clean[i] = r
        self.field = field
        self._sdm = SDM(clean, (m, n), field.domain)

    @classmethod
    def _wrap(cls, sdm, field):
        obj = cls.__new__(cls)
        obj.field = field
        obj._sdm = sdm
        return obj

    @classmethod
    def zeros(cls, shape, field):
        return cls({}, shape, field)

    @classmethod
    def identity(cls, n, field):
        one = field.one
        return cls({i: {i: one} for i in six.moves.range(n)}, (n, n), field)

    @classmethod
    def from_columns(cls, columns, shape, field):
        """
        :param dict columns: col -> {row: value}
        """
        rows = {}
        for j, column in six.iteritems(columns):
            for i, v in six.iteritems(column):
                if v:
                    rows.setdefault(i, {})[j] = v
        return cls(rows, shape, field)

    @classmethod
    def from_dense(cls, rows, field):
        m = len(rows)
        n = len(rows[0]) if m else 0
        return cls({i: {j: field(v) for j, v in enumerate(row)} for i, row in enumerate(rows)}, (m, n), field)

    @classmethod
    def block_diagonal(cls, blocks, field):
        rows, r0, c0 = {}, 0, 0
        for block in blocks:
            for i, row in block.rows_items():
                rows[r0 + i] = {c0 + j: v for j, v in six.iteritems(row)}
            r0 += block.nrows
            c0 += block.ncols
        return cls(rows, (r0, c0), field)

    @property
    def shape(self):
        return self._sdm.shape

    @property
    def nrows(self):
        return self._sdm.shape[0]

    @property
    def ncols(self):
        return self._sdm.shape[1]

    @property
    def sdm(self):
        return self._sdm

    @cached_property
    def _columns(self):
        cols = {}
        for i, row in six.iteritems(self._sdm):
            for j, v in six.iteritems(row):
                cols.setdefault(j, {})[i] = v
        return cols

    def rows_items(self):
        return sorted(six.iteritems(self._sdm))

    def row(self, i):
        return dict(self._sdm.get(i, {}))

    def column(self, j):
        return dict(self._columns.get(j, {}))

    def entries(self):
        for i, row in sorted(six.iteritems(self._sdm)):
            for j in sorted(row):
                yield i, j, row[j]

    def nnz(self):
        return sum(len(row) for row in self._sdm.values())

    def apply(self, vector):
        """
        Matrix times sparse column vector {col: value} -> {row: value}.
        """
        result = {}
        columns = self._columns
        for j, x in six.iteritems(vector):
            if j < 0 or j >= self.ncols:
                raise ShapeError(self.shape, j, 'apply')
            if not x:
                continue
            for i, v in six.iteritems(columns.get(j, {})):
                total = result.get(i)
                total = x * v if total is None else total + x * v
                if total:
                    result[i] = total
                else:
                    del result[i]
        return result

    def _check_same_shape(self, other, operation):
        if self.shape != other.shape:
            raise ShapeError(self.shape, other.shape, operation)

    def __mul__(self, other):
        if not isinstance(other, SparseMat):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise ShapeError(self.shape, other.shape, 'compose')
        return SparseMat._wrap(self._sdm.matmul(other._sdm), self.field)

    compose = __mul__

    def __add__(self, other):
        self._check_same_shape(other, 'add')
        return SparseMat._wrap(self._sdm.add(other._sdm), self.field)

    def __sub__(self, other):
        self._check_same_shape(other, 'sub')
        return SparseMat._wrap(self._sdm.sub(other._sdm), self.field)

    def __neg__(self):
        return SparseMat._wrap(self._sdm.neg(), self.field)

    def scale(self, c):
        c = self.field(c)
        if not c:
            return SparseMat.zeros(self.shape, self.field)
        return SparseMat._wrap(self._sdm.mul(c), self.field)

    def transpose(self):
        return SparseMat._wrap(self._sdm.transpose(), self.field)

    def is_zero(self):
        return not any(v for row in self._sdm.values() for v in row.values())

    def first_entry(self):
        """
        Smallest (row, col, value) by row then column; None for the zero matrix.
        """
        for entry in self.entries():
            return entry
        return None

    def restrict_rows(self, rows):
        """Rows listed (in order) become the rows 0..len-1 of the result."""
        return SparseMat({k: self._sdm.get(i, {}) for k, i in enumerate(rows)}, (len(rows), self.ncols), self.field)

    def restrict_columns(self, cols):
        index = {j: k for k, j in enumerate(cols)}
        rows = {}
        for i, row in six.iteritems(self._sdm):
            r = {index[j]: v for j, v in six.iteritems(row) if j in index}
            if r:
                rows[i] = r
        return SparseMat(rows, (self.nrows, len(cols)), self.field)

    def __eq__(self, other):
        if not isinstance(other, SparseMat) or self.shape != other.shape:
            return False
        return (self - other).is_zero()

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return '<SparseMat %dx%d, %d entries over %s>' % (self.nrows, self.ncols, self.nnz(), self.field.name)
