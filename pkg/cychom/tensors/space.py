# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six

from cychom.tensors.errors import IndexOutOfRangeError

__all__ = ('BasedSpace', 'MixedRadix')


class BasedSpace(object):
    """
    Finite-dimensional vector space with named basis vectors.
    """

    def __init__(self, labels, field):
        labels = tuple(six.text_type(label) for label in labels)
        if len(set(labels)) != len(labels):
            raise ValueError('Basis labels must be unique: %r' % (labels,))
        self.labels = labels
        self.field = field
        self._index = {label: i for i, label in enumerate(labels)}

    @classmethod
    def numbered(cls, prefix, dim, field):
        return cls(['%s%d' % (prefix, i) for i in six.moves.range(dim)], field)

    @property
    def dim(self):
        return len(self.labels)

    def index(self, label):
        return self._index[label]

    def has_label(self, label):
        return label in self._index

    def format(self, vector):
        """Human readable linear combination, e.g. 'd0 - 1/2*d2'."""
        parts = []
        for i in sorted(vector):
            c = self.field.to_str(vector[i])
            sign = '-' if c.startswith('-') else '+'
            c = c.lstrip('-')
            term = self.labels[i] if c == '1' else '%s*%s' % (c, self.labels[i])
            parts.append((sign, term))
        if not parts:
            return '0'
        text = ('-' if parts[0][0] == '-' else '') + parts[0][1]
        for sign, term in parts[1:]:
            text += ' %s %s' % (sign, term)
        return text

    def __eq__(self, other):
        return isinstance(other, BasedSpace) and self.labels == other.labels and self.field == other.field

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.labels, self.field))

    def __repr__(self):
        return '<BasedSpace dim=%d>' % self.dim


class MixedRadix(object):
    """
    Positional code of multi-indices: (i0, ..., ik) -> i0*s0 + ... + ik*sk,
    the last index running fastest.
    (0, 0) -> 0
    (0, 1) -> 1
    (1, 0) -> dims[1]
    """

    def __init__(self, dims):
        self.dims = tuple(dims)
        strides = []
        s = 1
        for d in reversed(self.dims):
            strides.append(s)
            s *= d
        self.strides = tuple(reversed(strides))
        self.size = s

    def encode(self, key):
        if len(key) != len(self.dims):
            raise IndexOutOfRangeError(key, self.dims)
        code = 0
        for i, d, s in zip(key, self.dims, self.strides):
            if not 0 <= i < d:
                raise IndexOutOfRangeError(key, self.dims)
            code += i * s
        return code

    def decode(self, code):
        if not 0 <= code < self.size:
            raise IndexOutOfRangeError(code, self.dims)
        key = []
        for s in self.strides:
            i, code = divmod(code, s)
            key.append(i)
        return tuple(key)

    def keys(self):
        for code in six.moves.range(self.size):
            yield self.decode(code)
