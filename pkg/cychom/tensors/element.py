# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six

from cychom.tensors.errors import FactorMismatchError, IndexOutOfRangeError
from cychom.tensors.space import MixedRadix
from cychom.utils import cyclic_sign, sparse_add

__all__ = ('TensorElem', 'WORD_LIMIT')

# signed 64-bit word
WORD_LIMIT = 2 ** 63


class TensorElem(object):
    """
    Element of V1 ⊗ ... ⊗ Vk as a sparse table multi-index -> scalar.
    The table is keyed by the mixed-radix code of the multi-index when the
    product of the dimensions fits in a word, by the index tuple otherwise.
    """

    def __init__(self, factors, coeffs=None, check=True):
        self.factors = tuple(factors)
        self.radix = MixedRadix(self.dims)
        self.words = self.radix.size <= WORD_LIMIT
        self.table = {}
        dims = self.dims
        for key, v in six.iteritems(coeffs or {}):
            key = tuple(key)
            if check and (len(key) != len(dims) or any(not 0 <= i < d for i, d in zip(key, dims))):
                raise IndexOutOfRangeError(key, dims)
            if v:
                self.table[self._key(key)] = v

    @classmethod
    def _from_table(cls, factors, table):
        obj = cls(factors)
        obj.table = {k: v for k, v in six.iteritems(table) if v}
        return obj

    def _key(self, index):
        return self.radix.encode(index) if self.words else index

    def _index(self, key):
        return self.radix.decode(key) if self.words else key

    @classmethod
    def basis_tensor(cls, factors, key, coefficient=None):
        field = factors[0].field if factors else None
        one = coefficient if coefficient is not None else field.one
        return cls(factors, {tuple(key): one})

    @property
    def dims(self):
        return tuple(f.dim for f in self.factors)

    @property
    def field(self):
        return self.factors[0].field

    @property
    def order(self):
        return len(self.factors)

    @property
    def coeffs(self):
        """Coefficients keyed by multi-index tuples."""
        return {self._index(k): v for k, v in six.iteritems(self.table)}

    def encoded(self):
        """Coefficients keyed by the mixed-radix code of each multi-index."""
        if self.words:
            return dict(self.table)
        return {self.radix.encode(k): v for k, v in six.iteritems(self.table)}

    @classmethod
    def from_encoded(cls, factors, vector):
        radix = MixedRadix([f.dim for f in factors])
        return cls(factors, {radix.decode(code): v for code, v in six.iteritems(vector)}, check=False)

    def _check_factors(self, other):
        if self.factors != other.factors:
            raise FactorMismatchError(other.dims, self.dims)

    def __add__(self, other):
        self._check_factors(other)
        return self._from_table(self.factors, sparse_add(dict(self.table), other.table))

    def __sub__(self, other):
        self._check_factors(other)
        return self._from_table(self.factors, sparse_add(dict(self.table), other.table, -self.field.one))

    def __neg__(self):
        return self._from_table(self.factors, {k: -v for k, v in six.iteritems(self.table)})

    def scale(self, c):
        c = self.field(c)
        return self._from_table(self.factors, {k: c * v for k, v in six.iteritems(self.table)})

    def __matmul__(self, other):
        factors = self.factors + other.factors
        product = TensorElem(factors)
        if product.words:
            # codes of the left factor are the high digits
            size = other.radix.size
            left, right = self.encoded(), other.encoded()
            product.table = {k1 * size + k2: v1 * v2
                             for k1, v1 in six.iteritems(left) for k2, v2 in six.iteritems(right)}
            return product
        coeffs = {}
        for k1, v1 in six.iteritems(self.coeffs):
            for k2, v2 in six.iteritems(other.coeffs):
                coeffs[k1 + k2] = v1 * v2
        return TensorElem(factors, coeffs, check=False)

    def flip(self):
        if self.order != 2:
            raise FactorMismatchError(self.dims, 'two factors')
        return TensorElem(self.factors[::-1], {(k[1], k[0]): v for k, v in six.iteritems(self.coeffs)}, check=False)

    def rotate(self, signed=True):
        """
        t(a0 ⊗ ... ⊗ an) = (-1)^n an ⊗ a0 ⊗ ... ⊗ a(n-1); all factors must agree.
        """
        if len(set(self.factors)) > 1:
            raise FactorMismatchError(self.dims, 'equal factors')
        sign = cyclic_sign(self.order - 1) if signed else 1
        return TensorElem(self.factors, {(k[-1],) + k[:-1]: sign * v for k, v in six.iteritems(self.coeffs)},
                          check=False)

    def scalar(self):
        """Value of an element whose factors are all one-dimensional."""
        if any(d != 1 for d in self.dims):
            raise FactorMismatchError(self.dims, 'one-dimensional factors')
        return self.table.get(self._key((0,) * self.order), self.field.zero)

    def is_zero(self):
        return not self.table

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return False
        return self.factors == other.factors and self.table == other.table

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __len__(self):
        return len(self.table)

    def __repr__(self):
        return '<TensorElem order=%d, %d terms>' % (self.order, len(self.table))
