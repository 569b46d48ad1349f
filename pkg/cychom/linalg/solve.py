# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom.linalg.errors import ShapeError, SingularMatrixError
from cychom.linalg.matrix import SparseMat

__all__ = ('rref', 'rank', 'kernel_basis', 'solve_affine', 'image_basis', 'inverse')

logger = logging.getLogger(__name__)


def rref(m):
    """
    Reduced row echelon form of m.
    :type m: SparseMat
    :return: list of (pivot, row dict) sorted by pivot column
    """
    reduced, pivots = m.sdm.rref()
    rows = []
    for row in reduced.values():
        nonzero = [j for j, v in six.iteritems(row) if v]
        if nonzero:
            rows.append((min(nonzero), dict(row)))
    rows.sort(key=lambda item: item[0])
    return rows


def rank(m):
    if not m.nrows or not m.ncols:
        return 0
    return len(rref(m))


def _kernel_from_rref(rows, ncols, field):
    pivots = {p for p, _ in rows}
    free = [j for j in six.moves.range(ncols) if j not in pivots]
    basis = {j: {j: field.one} for j in free}
    for p, row in rows:
        for j, v in six.iteritems(row):
            if j != p and j in basis:
                basis[j][p] = -v
    return [basis[j] for j in free], free


def kernel_basis(m, with_free=False):
    """
    Basis of {v : m v = 0}; vector j is 1 at free column j and 0 at the other free columns.
    :type m: SparseMat
    :rtype: list
    """
    rows = rref(m) if m.nrows and m.ncols else []
    basis, free = _kernel_from_rref(rows, m.ncols, m.field)
    logger.debug('kernel of %dx%d matrix: dimension %d', m.nrows, m.ncols, len(basis))
    if with_free:
        return basis, free
    return basis


def solve_affine(m, rhs):
    """
    One solution x of m x = rhs (free variables zero) and the kernel basis,
    or None when the system is inconsistent.
    :type m: SparseMat
    :param dict rhs: row -> value
    """
    nrows, ncols = m.shape
    if any(not 0 <= i < nrows for i in rhs):
        raise ShapeError(m.shape, max(rhs), 'solve_affine')
    rows = dict(m.sdm)
    augmented = {i: dict(r) for i, r in six.iteritems(rows)}
    for i, v in six.iteritems(rhs):
        if v:
            augmented.setdefault(i, {})[ncols] = v
    reduced = rref(SparseMat(augmented, (nrows, ncols + 1), m.field))
    if any(p == ncols for p, _ in reduced):
        return None
    particular = {}
    for p, row in reduced:
        v = row.get(ncols)
        if v:
            particular[p] = v
    stripped = [(p, {j: v for j, v in six.iteritems(row) if j != ncols}) for p, row in reduced]
    basis, _ = _kernel_from_rref(stripped, ncols, m.field)
    return particular, basis


def image_basis(m):
    """Column space of m as echelon row vectors (pivot, vector)."""
    return rref(m.transpose())


def inverse(m):
    n = m.nrows
    if n != m.ncols:
        raise SingularMatrixError(m.shape, rank(m))
    field = m.field
    columns = {}
    for j in six.moves.range(n):
        solution = solve_affine(m, {j: field.one})
        if solution is None:
            raise SingularMatrixError(m.shape, rank(m))
        columns[j] = solution[0]
    if rank(m) != n:
        raise SingularMatrixError(m.shape, rank(m))
    return SparseMat.from_columns(columns, (n, n), field)
