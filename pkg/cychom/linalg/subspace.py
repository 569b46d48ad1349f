# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six

from cychom.linalg.errors import NotInSubspaceError
from cychom.linalg.matrix import SparseMat
from cychom.linalg.solve import kernel_basis, rref
from cychom.utils import sparse_add

__all__ = ('Subspace', 'Quotient')


class Subspace(object):
    """
    Kernel of a matrix, kept in free-column normal form: basis vector k has a 1
    at free column free[k] and 0 at the other free columns. The coordinates of
    a member are therefore its entries at the free columns.
    """

    def __init__(self, basis, free, ambient_dim, field):
        self.basis = basis
        self.free = free
        self.ambient_dim = ambient_dim
        self.field = field
        self._position = {j: k for k, j in enumerate(free)}

    @classmethod
    def kernel(cls, m):
        basis, free = kernel_basis(m, with_free=True)
        return cls(basis, free, m.ncols, m.field)

    @property
    def dim(self):
        return len(self.basis)

    def embed(self, coords):
        """Subspace coordinates {k: value} -> ambient vector."""
        result = {}
        for k, c in six.iteritems(coords):
            sparse_add(result, self.basis[k], c)
        return result

    def coordinates(self, vector, check=True):
        coords = {self._position[j]: v for j, v in six.iteritems(vector) if j in self._position and v}
        if check:
            rebuilt = self.embed(coords)
            diff = sparse_add(dict(rebuilt), vector, -self.field.one)
            if diff:
                raise NotInSubspaceError(self.dim, witness=min(diff))
        return coords

    def contains(self, vector):
        try:
            self.coordinates(vector)
        except NotInSubspaceError:
            return False
        return True

    def embedding_matrix(self):
        return SparseMat.from_columns(dict(enumerate(self.basis)), (self.ambient_dim, self.dim), self.field)


class Quotient(object):
    """
    V / span(relations). Representatives are the standard basis vectors at the
    non-pivot columns of the echelon form of the relations.
    """

    def __init__(self, relations, ambient_dim, field):
        self.ambient_dim = ambient_dim
        self.field = field
        rows = dict(enumerate(r for r in relations if r))
        if rows:
            self._echelon = rref(SparseMat(rows, (len(rows), ambient_dim), field))
        else:
            self._echelon = []
        pivots = {p for p, _ in self._echelon}
        self.representatives = [j for j in six.moves.range(ambient_dim) if j not in pivots]
        self._position = {j: k for k, j in enumerate(self.representatives)}

    @property
    def dim(self):
        return len(self.representatives)

    @property
    def relation_rank(self):
        return len(self._echelon)

    def reduce(self, vector):
        """Normal form of vector modulo the relations (supported on representatives)."""
        result = dict(vector)
        for p, row in self._echelon:
            c = result.get(p)
            if c:
                sparse_add(result, row, -c)
        return result

    def coordinates(self, vector):
        reduced = self.reduce(vector)
        return {self._position[j]: v for j, v in six.iteritems(reduced)}

    def section(self, coords):
        return {self.representatives[k]: v for k, v in six.iteritems(coords) if v}

    def projection_matrix(self):
        columns = {j: self.coordinates({j: self.field.one}) for j in six.moves.range(self.ambient_dim)}
        return SparseMat.from_columns(columns, (self.dim, self.ambient_dim), self.field)
