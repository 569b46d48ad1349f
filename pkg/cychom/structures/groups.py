# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import AbelianGroup, DihedralGroup

from cychom.structures.errors import InvalidGroupError

__all__ = ('FiniteGroup', 'small_groups', 'quaternion_group', 'symmetric_group_s3')


class FiniteGroup(object):
    """
    Finite group as a multiplication table over element indices 0..n-1.
    """

    def __init__(self, labels, table, name=None):
        self.labels = tuple(six.text_type(label) for label in labels)
        self.table = tuple(tuple(row) for row in table)
        self.name = name or 'G%d' % len(self.labels)
        self._validate()
        self.identity = self._find_identity()
        self._inverse = tuple(self._find_inverse(g) for g in self.elements)

    @classmethod
    def cyclic(cls, n):
        """Z/n with labels '0'..'n-1' and addition mod n."""
        return cls([six.text_type(i) for i in six.moves.range(n)],
                   [[(i + j) % n for j in six.moves.range(n)] for i in six.moves.range(n)],
                   name='Z%d' % n)

    @classmethod
    def trivial(cls):
        return cls(['1'], [[0]], name='Z1')

    @classmethod
    def from_permutation_group(cls, group, name=None):
        elements = sorted(group.generate(), key=lambda p: p.array_form)
        index = {tuple(p.array_form): i for i, p in enumerate(elements)}
        table = [[index[tuple((p * q).array_form)] for q in elements] for p in elements]
        labels = ['g%d' % i for i in six.moves.range(len(elements))]
        return cls(labels, table, name=name)

    @property
    def order(self):
        return len(self.labels)

    @property
    def elements(self):
        return six.moves.range(self.order)

    def multiply(self, g, h):
        return self.table[g][h]

    def inverse(self, g):
        return self._inverse[g]

    def index(self, label):
        return self.labels.index(six.text_type(label))

    def _validate(self):
        n = len(self.labels)
        if n == 0 or len(self.table) != n or any(len(row) != n for row in self.table):
            raise InvalidGroupError('table is not square of size %d' % n)
        for row in self.table:
            if sorted(row) != list(six.moves.range(n)):
                raise InvalidGroupError('rows must be permutations', witness=row)
        for g in six.moves.range(n):
            for h in six.moves.range(n):
                for k in six.moves.range(n):
                    if self.table[self.table[g][h]][k] != self.table[g][self.table[h][k]]:
                        raise InvalidGroupError('not associative', witness=(g, h, k))

    def _find_identity(self):
        for e in self.elements:
            if all(self.table[e][g] == g == self.table[g][e] for g in self.elements):
                return e
        raise InvalidGroupError('no identity')

    def _find_inverse(self, g):
        for h in self.elements:
            if self.table[g][h] == self.identity:
                return h
        raise InvalidGroupError('no inverse', witness=g)

    def conjugacy_classes(self):
        seen, classes = set(), []
        for g in self.elements:
            if g in seen:
                continue
            cls_ = sorted({self.multiply(self.multiply(x, g), self.inverse(x)) for x in self.elements})
            seen.update(cls_)
            classes.append(cls_)
        return classes

    def conjugacy_class_count(self):
        return len(self.conjugacy_classes())

    def is_subgroup(self, indices):
        s = set(indices)
        return self.identity in s and all(self.multiply(g, h) in s for g in s for h in s)

    def subgroup(self, indices):
        """
        Subgroup on the given elements, with its embedding (list of indices in self).
        """
        indices = sorted(indices)
        if not self.is_subgroup(indices):
            raise InvalidGroupError('elements %s are not a subgroup' % (indices,))
        position = {g: i for i, g in enumerate(indices)}
        table = [[position[self.multiply(g, h)] for h in indices] for g in indices]
        return FiniteGroup([self.labels[g] for g in indices], table, name='%s<%s' % (self.name, len(indices))), indices

    def __repr__(self):
        return '<FiniteGroup %s of order %d>' % (self.name, self.order)


def quaternion_group():
    # left multiplication on 1, -1, i, -i, j, -j, k, -k
    i = Permutation([2, 3, 1, 0, 6, 7, 5, 4])
    j = Permutation([4, 5, 7, 6, 1, 0, 2, 3])
    return FiniteGroup.from_permutation_group(PermutationGroup([i, j]), name='Q8')


def small_groups():
    """
    All groups of order at most 8 up to isomorphism, as (name, group).
    """
    groups = [('Z1', FiniteGroup.trivial())]
    for n in six.moves.range(2, 9):
        groups.append(('Z%d' % n, FiniteGroup.cyclic(n)))
    groups.extend([
        ('Z2xZ2', FiniteGroup.from_permutation_group(AbelianGroup(2, 2), name='Z2xZ2')),
        ('S3', FiniteGroup.from_permutation_group(DihedralGroup(3), name='S3')),
        ('Z4xZ2', FiniteGroup.from_permutation_group(AbelianGroup(4, 2), name='Z4xZ2')),
        ('Z2xZ2xZ2', FiniteGroup.from_permutation_group(AbelianGroup(2, 2, 2), name='Z2xZ2xZ2')),
        ('D4', FiniteGroup.from_permutation_group(DihedralGroup(4), name='D4')),
        ('Q8', quaternion_group()),
    ])
    groups.sort(key=lambda item: (item[1].order, item[0]))
    return groups


def symmetric_group_s3():
    return FiniteGroup.from_permutation_group(DihedralGroup(3), name='S3')

