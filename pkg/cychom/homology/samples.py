# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six

from cychom.homology.complex import ChainComplex, ChainMap, GradedMap, Homotopy
from cychom.linalg import RATIONALS, SparseMat, inverse
from cychom.settings import RANDOM_MAX_DIM

__all__ = ('SplitSequence', 'random_split_sequence', 'random_invertible')


class SplitSequence(object):
    """
    Graded-split short exact sequence X -> Y -> Z with a contracting homotopy h of X.
    """

    def __init__(self, x, y, z, iota, pi, rho, sigma, h):
        self.x, self.y, self.z = x, y, z
        self.iota, self.pi, self.rho, self.sigma, self.h = iota, pi, rho, sigma, h

    def args(self):
        return self.x, self.y, self.z, self.iota, self.pi, self.rho, self.sigma, self.h


def _entry(rng, field):
    return field(rng.randint(-3, 3))


def random_invertible(rng, n, field=RATIONALS):
    """
    Product of a random unit lower and a random unit upper triangular matrix, with its inverse.
    """
    lower = {i: {i: field.one} for i in six.moves.range(n)}
    upper = {i: {i: field.one} for i in six.moves.range(n)}
    for i in six.moves.range(n):
        for j in six.moves.range(i):
            lower[i][j] = _entry(rng, field)
            upper[j][i] = _entry(rng, field)
    m = SparseMat(lower, (n, n), field) * SparseMat(upper, (n, n), field)
    return m, inverse(m)


def _random_matrix(rng, shape, field):
    m, n = shape
    rows = {i: {j: _entry(rng, field) for j in six.moves.range(n)} for i in six.moves.range(m)}
    return SparseMat(rows, shape, field)


def _conjugate(diffs, changes, top):
    """d_n -> P_{n-1} d_n P_n⁻¹"""
    return {n: changes[n - 1][0] * diffs[n] * changes[n][1] for n in six.moves.range(1, top + 1)}


def random_split_sequence(rng, field=RATIONALS, length=None):
    """
    Y = X ⊕ Z in a random basis, X a sum of elementary contractible pieces k -> k
    in a random basis, Z a random complex. The splitting is twisted by a random
    graded f: Z -> X. Degrees 0 .. length - 1, every Y_n of
    dimension at most RANDOM_MAX_DIM.
    :type rng: random.Random
    :rtype: SplitSequence
    """
    length = length or rng.randint(2, 5)
    top = length - 1
    half = RANDOM_MAX_DIM // 2
    one = field.one
    # pieces[n]: number of k -> k pieces from degree n to n - 1
    pieces = [0] + [rng.randint(0, 1) for _ in six.moves.range(top)] + [0]
    x_dims = [pieces[n + 1] + pieces[n] for n in six.moves.range(length)]
    ranks = [0] * (length + 1)
    z_dims = []
    for n in six.moves.range(length):
        z_dims.append(rng.randint(ranks[n], half))
        ranks[n + 1] = rng.randint(0, z_dims[n] - ranks[n]) if n < top else 0

    # X_n = targets of pieces from degree n + 1, then sources of pieces to degree n - 1
    x_d, x_h = {}, {}
    for n in six.moves.range(1, length):
        x_d[n] = SparseMat({i: {pieces[n + 1] + i: one} for i in six.moves.range(pieces[n])},
                           (x_dims[n - 1], x_dims[n]), field)
    for n in six.moves.range(0, top):
        x_h[n] = SparseMat({pieces[n + 2] + i: {i: one} for i in six.moves.range(pieces[n + 1])},
                           (x_dims[n + 1], x_dims[n]), field)
    # Z_n = targets of d_{n+1}, then homology, then the sources of d_n
    z_d = {}
    for n in six.moves.range(1, length):
        offset = z_dims[n] - ranks[n]
        z_d[n] = SparseMat({i: {offset + i: one} for i in six.moves.range(ranks[n])},
                           (z_dims[n - 1], z_dims[n]), field)

    x_changes = [random_invertible(rng, d, field) for d in x_dims]
    z_changes = [random_invertible(rng, d, field) for d in z_dims]
    x_d = _conjugate(x_d, x_changes, top)
    z_d = _conjugate(z_d, z_changes, top)
    x_h = {n: x_changes[n + 1][0] * x_h[n] * x_changes[n][1] for n in six.moves.range(0, top)}

    y_dims = [a + b for a, b in zip(x_dims, z_dims)]
    y_d = {n: SparseMat.block_diagonal([x_d[n], z_d[n]], field) for n in six.moves.range(1, length)}
    y_changes = [random_invertible(rng, d, field) for d in y_dims]
    y_d = _conjugate(y_d, y_changes, top)

    iota, pi, rho, sigma = {}, {}, {}, {}
    for n in six.moves.range(length):
        a, b = x_dims[n], z_dims[n]
        p, p_inv = y_changes[n]
        iota[n] = p * SparseMat({i: {i: one} for i in six.moves.range(a)}, (a + b, a), field)
        sigma[n] = p * SparseMat({a + i: {i: one} for i in six.moves.range(b)}, (a + b, b), field)
        rho[n] = SparseMat({i: {i: one} for i in six.moves.range(a)}, (a, a + b), field) * p_inv
        pi[n] = SparseMat({i: {a + i: one} for i in six.moves.range(b)}, (b, a + b), field) * p_inv
        # still a splitting; rho d sigma becomes d f - f d
        f = _random_matrix(rng, (a, b), field)
        sigma[n] = sigma[n] + iota[n] * f
        rho[n] = rho[n] - f * pi[n]

    x = ChainComplex(x_dims, x_d, field=field, name='X')
    y = ChainComplex(y_dims, y_d, field=field, name='Y')
    z = ChainComplex(z_dims, z_d, field=field, name='Z')
    return SplitSequence(x, y, z, ChainMap(x, y, iota), ChainMap(y, z, pi), GradedMap(y, x, rho),
                         GradedMap(z, y, sigma), Homotopy(x, x, x_h))
