# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six

from cychom.linalg import RATIONALS
from cychom.rowext.extension import AugmentedModule
from cychom.settings import RANDOM_MAX_DIM
from cychom.structures import ground_field, product_algebra
from cychom.tensors import BasedSpace

__all__ = ('line_extension', 'random_augmented_module', 'free_augmented_module')


def line_extension(field=RATIONALS, twisted=False):
    """
    B = k, M = span(s, i), ε(s) = 1, ε(i) = 0, σ(1) = s.
    Untwisted: 1 acts as the identity. Twisted: 1·s = s + i, 1·i = 0, so ω(1, 1) = i.
    :rtype: tuple (AugmentedModule, dict)
    """
    one = field.one
    base = ground_field(field)
    space = BasedSpace(['s', 'i'], field)
    if twisted:
        action = {(0, 0): {0: one, 1: one}}
    else:
        action = {(0, 0): {0: one}, (0, 1): {1: one}}
    am = AugmentedModule(base, space, action, {0: {0: one}}, name='twisted line' if twisted else 'line')
    return am, {0: {0: one}}


def free_augmented_module(base, betas, name=None):
    """
    M = B ⊕ B^r with the diagonal action and ε(x, y) = x + Σ y_j β_j,
    basis index copy * dim B + k. B must be commutative.
    """
    field = base.field
    dim = base.dim
    copies = len(betas) + 1
    labels = ['%s%s' % ('b' if c == 0 else 'y%d:' % c, base.labels[k])
              for c in six.moves.range(copies) for k in six.moves.range(dim)]
    action = {}
    for x in six.moves.range(dim):
        for c in six.moves.range(copies):
            for k in six.moves.range(dim):
                product = base.multiply_basis(x, k)
                if product:
                    action[(x, c * dim + k)] = {c * dim + z: v for z, v in six.iteritems(product)}
    aug = {k: {k: field.one} for k in six.moves.range(dim)}
    for c, beta in enumerate(betas, 1):
        for k in six.moves.range(dim):
            aug[c * dim + k] = base.multiply({k: field.one}, beta)
    return AugmentedModule(base, BasedSpace(labels, field), action, aug, name=name)


def _random_vector(rng, dim, field):
    return {k: field(rng.randint(-2, 2)) for k in six.moves.range(dim)}


def random_augmented_module(rng, field=RATIONALS):
    """
    B ∈ {k, k²}, M = B ⊕ B^r free of dimension at most RANDOM_MAX_DIM with a
    random ε, and a random linear section σ(b) = (b, 0) + κ(b), κ with values in
    I = ker ε, so that σ is in general not multiplicative.
    :type rng: random.Random
    :rtype: tuple (AugmentedModule, dict)
    """
    base = rng.choice([ground_field(field), product_algebra(2, field)])
    dim = base.dim
    r = rng.randint(0, RANDOM_MAX_DIM // dim - 1)
    betas = [{k: v for k, v in six.iteritems(_random_vector(rng, dim, field)) if v} for _ in six.moves.range(r)]
    am = free_augmented_module(base, betas, name='random(%s, %d)' % (base.name, r))
    sigma = {}
    for x in six.moves.range(dim):
        vector = {x: field.one}
        for c, beta in enumerate(betas, 1):
            # (-y β, y) lies in I for every y ∈ B
            y = _random_vector(rng, dim, field)
            for k, v in six.iteritems(base.multiply(y, beta)):
                vector[k] = vector.get(k, field.zero) - v
            for k, v in six.iteritems(y):
                vector[c * dim + k] = vector.get(c * dim + k, field.zero) + v
        sigma[x] = {k: v for k, v in six.iteritems(vector) if v}
    return am, sigma
