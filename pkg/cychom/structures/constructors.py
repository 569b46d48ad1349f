# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six

from cychom.structures.algebra import Algebra
from cychom.structures.coalgebra import Coalgebra
from cychom.structures.hopf import HopfAlgebra
from cychom.tensors import BasedSpace

__all__ = ('ground_field', 'product_algebra', 'dual_numbers', 'square_zero', 'function_algebra_of_group',
           'group_algebra', 'matrix_algebra', 'tensor_algebra', 'triangular_algebra', 'opposite',
           'ground_coalgebra', 'matrix_element')


def ground_field(field):
    space = BasedSpace(['1'], field)
    return Algebra(space, {(0, 0): {0: field.one}}, name='k')


def ground_coalgebra(field):
    space = BasedSpace(['1'], field)
    return Coalgebra(space, {0: {(0, 0): field.one}}, {0: field.one}, grouplike={0: field.one}, name='k')


def product_algebra(n, field):
    """k^n with orthogonal idempotents e0..e(n-1)."""
    space = BasedSpace.numbered('e', n, field)
    return Algebra(space, {(i, i): {i: field.one} for i in six.moves.range(n)}, name='k%d' % n)


def dual_numbers(field):
    """k[x]/(x²)"""
    one = field.one
    space = BasedSpace(['1', 'x'], field)
    return Algebra(space, {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}}, name='k[x]/(x2)')


def square_zero(dim, field):
    """Non-unital algebra with all products zero."""
    return Algebra(BasedSpace.numbered('x', dim, field), {}, name='sq0(%d)' % dim)


def function_algebra_of_group(group, field):
    """
    k^G: pointwise product δ_x δ_y = δ_{x,y} δ_x, Δ(δ_g) = sum_{hk=g} δ_h ⊗ δ_k,
    ε(δ_g) = [g = 1], S(δ_g) = δ_{g⁻¹}.
    :rtype: HopfAlgebra
    """
    one = field.one
    space = BasedSpace(['d%s' % label for label in group.labels], field)
    mult = {(g, g): {g: one} for g in group.elements}
    algebra = Algebra(space, mult, name='k^%s' % group.name)
    comult = {}
    for h in group.elements:
        for k in group.elements:
            comult.setdefault(group.multiply(h, k), {})[(h, k)] = one
    unit = {g: one for g in group.elements}
    coalgebra = Coalgebra(space, comult, {group.identity: one}, grouplike=unit, name='k^%s' % group.name)
    antipode = {g: {group.inverse(g): one} for g in group.elements}
    return HopfAlgebra(algebra, coalgebra, antipode, name='k^%s' % group.name)


def group_algebra(group, field):
    """
    kG: g·h = gh, Δ(g) = g ⊗ g, ε(g) = 1, S(g) = g⁻¹.
    :rtype: HopfAlgebra
    """
    one = field.one
    space = BasedSpace(list(group.labels), field)
    mult = {(g, h): {group.multiply(g, h): one} for g in group.elements for h in group.elements}
    algebra = Algebra(space, mult, name='k%s' % group.name)
    comult = {g: {(g, g): one} for g in group.elements}
    counit = {g: one for g in group.elements}
    coalgebra = Coalgebra(space, comult, counit, grouplike={group.identity: one}, name='k%s' % group.name)
    antipode = {g: {group.inverse(g): one} for g in group.elements}
    return HopfAlgebra(algebra, coalgebra, antipode, name='k%s' % group.name)


def matrix_algebra(b, n):
    """
    M_n(B) with basis E_ij(b_k), index (i*n + j)*dim B + k.
    """
    dim = b.dim
    field = b.field
    labels = ['E%d%d(%s)' % (i + 1, j + 1, b.labels[k])
              for i in six.moves.range(n) for j in six.moves.range(n) for k in six.moves.range(dim)]

    def index(i, j, k):
        return (i * n + j) * dim + k

    mult = {}
    for i in six.moves.range(n):
        for j in six.moves.range(n):
            for l in six.moves.range(n):
                for x in six.moves.range(dim):
                    for y in six.moves.range(dim):
                        product = b.multiply_basis(x, y)
                        if product:
                            mult[(index(i, j, x), index(j, l, y))] = {index(i, l, z): v
                                                                     for z, v in six.iteritems(product)}
    left_unit = None
    if b.left_unit is not None:
        left_unit = {index(i, i, z): v for i in six.moves.range(n) for z, v in six.iteritems(b.left_unit)}
    return Algebra(BasedSpace(labels, field), mult, left_unit=left_unit, name='M%d(%s)' % (n, b.name))


def tensor_algebra(a, b):
    field = a.field
    labels = ['%s*%s' % (x, y) for x in a.labels for y in b.labels]
    mult = {}
    for i in six.moves.range(a.dim):
        for j in six.moves.range(a.dim):
            left = a.multiply_basis(i, j)
            if not left:
                continue
            for k in six.moves.range(b.dim):
                for l in six.moves.range(b.dim):
                    right = b.multiply_basis(k, l)
                    product = {}
                    for x, u in six.iteritems(left):
                        for y, v in six.iteritems(right):
                            product[x * b.dim + y] = u * v
                    if product:
                        mult[(i * b.dim + k, j * b.dim + l)] = product
    return Algebra(BasedSpace(labels, field), mult, name='%s(x)%s' % (a.name, b.name))


def triangular_algebra(b, module_dim, action):
    """
    T = [[B, I], [0, k]] for a left B-module I of dimension module_dim;
    action[(x, m)] = {m': c} gives b_x · i_m. Basis: B, then I, then the corner z.
    """
    field = b.field
    one = field.one
    labels = ['b:%s' % l for l in b.labels] + ['i%d' % m for m in six.moves.range(module_dim)] + ['z']
    nb = b.dim
    z = nb + module_dim
    mult = {}
    for (x, y), product in six.iteritems(b.mult):
        mult[(x, y)] = dict(product)
    for (x, m), image in six.iteritems(action):
        if image:
            mult[(x, nb + m)] = {nb + k: v for k, v in six.iteritems(image)}
    for m in six.moves.range(module_dim):
        mult[(nb + m, z)] = {nb + m: one}
    mult[(z, z)] = {z: one}
    return Algebra(BasedSpace(labels, field), mult, name='T(%s)' % b.name)


def opposite(a):
    mult = {(j, i): dict(product) for (i, j), product in six.iteritems(a.mult)}
    return Algebra(a.space, mult, name='%s^op' % a.name)


def matrix_element(b, n, entries):
    """
    Element of M_n(B) from {(i, j): B-vector}, 0-based positions.
    """
    dim = b.dim
    result = {}
    for (i, j), vector in six.iteritems(entries):
        for k, v in six.iteritems(vector):
            if v:
                result[(i * n + j) * dim + k] = v
    return result
