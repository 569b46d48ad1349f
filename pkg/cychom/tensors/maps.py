# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six

from cychom.linalg import SparseMat
from cychom.tensors.element import TensorElem
from cychom.tensors.errors import FactorMismatchError
from cychom.utils import cached_property

__all__ = ('LinearMap', 'apply_tensor_power', 'apply_slotwise')


class LinearMap(object):
    """
    Linear map source -> target given by a target.dim x source.dim matrix.
    """

    def __init__(self, source, target, matrix):
        if matrix.shape != (target.dim, source.dim):
            raise FactorMismatchError(matrix.shape, (target.dim, source.dim))
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def identity(cls, space):
        return cls(space, space, SparseMat.identity(space.dim, space.field))

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, SparseMat.zeros((target.dim, source.dim), source.field))

    @classmethod
    def from_images(cls, source, target, images):
        """
        :param dict images: source basis index -> sparse vector in target
        """
        return cls(source, target, SparseMat.from_columns(images, (target.dim, source.dim), source.field))

    @cached_property
    def images(self):
        return [self.matrix.column(j) for j in six.moves.range(self.source.dim)]

    def __call__(self, vector):
        return self.matrix.apply(vector)

    def compose(self, other):
        """self ∘ other"""
        if other.target != self.source:
            raise FactorMismatchError(other.target.dim, self.source.dim)
        return LinearMap(other.source, self.target, self.matrix * other.matrix)


def apply_slotwise(maps, x):
    """
    (f1 ⊗ ... ⊗ fk)(x), expanding one slot at a time with sparse accumulation.
    """
    if len(maps) != x.order:
        raise FactorMismatchError(x.order, len(maps))
    for f, factor in zip(maps, x.factors):
        if f.source != factor:
            raise FactorMismatchError(factor.dim, f.source.dim)
    images = [f.images for f in maps]
    coeffs = {}
    for key, c in six.iteritems(x.coeffs):
        partial = {(): c}
        for slot, i in enumerate(key):
            image = images[slot][i]
            if not image:
                partial = {}
                break
            expanded = {}
            for prefix, v in six.iteritems(partial):
                for j, w in six.iteritems(image):
                    expanded[prefix + (j,)] = v * w
            partial = expanded
        for k, v in six.iteritems(partial):
            total = coeffs.get(k)
            total = v if total is None else total + v
            if total:
                coeffs[k] = total
            else:
                del coeffs[k]
    return TensorElem([f.target for f in maps], coeffs, check=False)


def apply_tensor_power(f, n, x):
    """
    f^{⊗n}(x) for x in V^{⊗n}, V = f.source.
    :type f: LinearMap
    :type x: TensorElem
    """
    if x.order != n:
        raise FactorMismatchError(x.order, n)
    return apply_slotwise([f] * n, x)
