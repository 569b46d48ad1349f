# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import itertools
import logging

import six

from cychom.linalg import SparseMat, Subspace
from cychom.report import Report
from cychom.settings import GROUPLIKE_SEARCH_MAX_DIM
from cychom.structures.errors import CotraceError, NonCoassociativeError
from cychom.tensors import MixedRadix
from cychom.utils import cached_property, sparse_add

__all__ = ('Coalgebra', 'check_coalgebra', 'Cotrace', 'cotrace_basis')

logger = logging.getLogger(__name__)


class Coalgebra(object):
    """
    Finite-dimensional coalgebra: comult[i] = {(j, k): c} means
    Δ(c_i) = sum c c_j ⊗ c_k, counit[i] = ε(c_i).
    """

    def __init__(self, space, comult, counit, grouplike=None, name=None, validate=True):
        self.space = space
        self.name = name or 'C'
        self.comult = {i: {k: v for k, v in six.iteritems(d) if v} for i, d in six.iteritems(comult)}
        self.counit = {i: v for i, v in six.iteritems(counit) if v}
        self.grouplike = dict(grouplike) if grouplike is not None else None
        if validate:
            for axiom, witness in self.axiom_witnesses():
                if witness is not None:
                    raise NonCoassociativeError(self.name, axiom, witness=witness)

    @property
    def field(self):
        return self.space.field

    @property
    def dim(self):
        return self.space.dim

    @property
    def labels(self):
        return self.space.labels

    def comultiply(self, x):
        result = {}
        for i, a in six.iteritems(x):
            sparse_add(result, self.comult.get(i, {}), a)
        return result

    def epsilon(self, x):
        total = self.field.zero
        for i, a in six.iteritems(x):
            v = self.counit.get(i)
            if v:
                total += a * v
        return total

    def iterated_comultiply(self, x, m):
        """
        Δ^(m)(x) in C^{⊗(m+1)}, keyed by tuples; m = 0 gives x itself.
        """
        current = {(i,): a for i, a in six.iteritems(x) if a}
        for _ in six.moves.range(m):
            expanded = {}
            for key, a in six.iteritems(current):
                for (j, k), v in six.iteritems(self.comult.get(key[-1], {})):
                    sparse_add(expanded, {key[:-1] + (j, k): v}, a)
            current = expanded
        return current

    def flip_comultiply(self, x):
        return {(k, j): v for (j, k), v in six.iteritems(self.comultiply(x))}

    def is_grouplike(self, x):
        if not x or self.epsilon(x) != self.field.one:
            return False
        square = {}
        for i, a in six.iteritems(x):
            for j, b in six.iteritems(x):
                square[(i, j)] = a * b
        return self.comultiply(x) == {k: v for k, v in six.iteritems(square) if v}

    def grouplike_candidates(self):
        """
        Grouplikes among the combinations with coefficients 0, 1, -1.
        """
        if self.dim > GROUPLIKE_SEARCH_MAX_DIM:
            return []
        one = self.field.one
        found = []
        for signs in itertools.product((0, 1, -1), repeat=self.dim):
            x = {i: s * one for i, s in enumerate(signs) if s}
            if x and self.is_grouplike(x):
                found.append(x)
        return found

    def axiom_witnesses(self):
        """(axiom name, witness label or None) for coassociativity, counits and grouplike."""
        field = self.field
        one = field.one
        result = []
        coassoc = None
        for i in six.moves.range(self.dim):
            left, right = {}, {}
            for (j, k), v in six.iteritems(self.comult.get(i, {})):
                for (a, b), w in six.iteritems(self.comult.get(j, {})):
                    sparse_add(left, {(a, b, k): v * w})
                for (a, b), w in six.iteritems(self.comult.get(k, {})):
                    sparse_add(right, {(j, a, b): v * w})
            if left != right:
                diff = sparse_add(dict(left), right, -one)
                key = min(diff)
                coassoc = (self.labels[i], tuple(self.labels[x] for x in key))
                break
        result.append(('coassociativity', coassoc))
        counit = None
        for i in six.moves.range(self.dim):
            left, right = {}, {}
            for (j, k), v in six.iteritems(self.comult.get(i, {})):
                sparse_add(left, {k: v * self.counit.get(j, field.zero)})
                sparse_add(right, {j: v * self.counit.get(k, field.zero)})
            if left != {i: one} or right != {i: one}:
                counit = self.labels[i]
                break
        result.append(('counit', counit))
        grouplike = None
        if self.grouplike is not None and not self.is_grouplike(self.grouplike):
            grouplike = self.space.format(self.grouplike)
        result.append(('grouplike', grouplike))
        return result

    @cached_property
    def flip_difference_matrix(self):
        """Δ − flip∘Δ as a dim² x dim matrix."""
        radix = MixedRadix((self.dim, self.dim))
        one = self.field.one
        columns = {}
        for i in six.moves.range(self.dim):
            column = {}
            for (j, k), v in six.iteritems(self.comult.get(i, {})):
                sparse_add(column, {radix.encode((j, k)): v})
                sparse_add(column, {radix.encode((k, j)): v}, -one)
            columns[i] = column
        return SparseMat.from_columns(columns, (self.dim * self.dim, self.dim), self.field)

    def format(self, vector):
        return self.space.format(vector)

    def __repr__(self):
        return '<Coalgebra %s of dimension %d>' % (self.name, self.dim)


def check_coalgebra(c):
    """
    :type c: Coalgebra
    :rtype: Report
    """
    report = Report('coalgebra %s' % c.name)
    for axiom, witness in c.axiom_witnesses():
        report.add(axiom, witness is None, witness)
    report.data['dim'] = c.dim
    return report


class Cotrace(object):
    """
    Element of C whose coproduct is flip symmetric.
    """

    def __init__(self, coalgebra, element, check=True):
        self.coalgebra = coalgebra
        self.element = {i: v for i, v in six.iteritems(element) if v}
        if check:
            delta = coalgebra.comultiply(self.element)
            flipped = coalgebra.flip_comultiply(self.element)
            if delta != flipped:
                diff = sparse_add(dict(delta), flipped, -coalgebra.field.one)
                raise CotraceError(witness=tuple(coalgebra.labels[x] for x in min(diff)))

    def __add__(self, other):
        return Cotrace(self.coalgebra, sparse_add(dict(self.element), other.element), check=False)

    def __eq__(self, other):
        return isinstance(other, Cotrace) and self.element == other.element

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return '<Cotrace %s>' % self.coalgebra.format(self.element)


def cotrace_basis(c):
    """
    Basis of the equalizer of Δ and flip∘Δ.
    :type c: Coalgebra
    :rtype: list
    """
    space = Subspace.kernel(c.flip_difference_matrix)
    logger.debug('cotrace space of %s has dimension %d', c.name, space.dim)
    return [Cotrace(c, v, check=False) for v in space.basis]
