# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six

from cychom.linalg import SparseMat, rank, solve_affine
from cychom.report import Report
from cychom.structures.coalgebra import Cotrace, cotrace_basis
from cychom.structures.errors import ComoduleAxiomError
from cychom.utils import sparse_add

__all__ = ('Comodule', 'check_comodule', 'direct_sum', 'one_dimensional', 'comodule_from_representation',
           'comodule_character', 'enough_characters', 'character_decomposition')


class Comodule(object):
    """
    Finite-dimensional right comodule given by its matrix coefficients:
    v_j ↦ sum_i v_i ⊗ c_ij, so that Δ(c_ik) = sum_j c_ij ⊗ c_jk and ε(c_ij) = δ_ij.
    """

    def __init__(self, coalgebra, dim, matrix, name=None, validate=True):
        self.coalgebra = coalgebra
        self.dim = dim
        self.name = name or 'V'
        self.matrix = {}
        for (i, j), c in six.iteritems(matrix):
            c = {k: v for k, v in six.iteritems(c) if v}
            if c:
                self.matrix[(i, j)] = c
        if validate:
            for axiom, witness in self.axiom_witnesses():
                if witness is not None:
                    raise ComoduleAxiomError(self.name, axiom, witness=witness)

    def entry(self, i, j):
        return self.matrix.get((i, j), {})

    def axiom_witnesses(self):
        c = self.coalgebra
        field = c.field
        result = []
        comult = None
        for i in six.moves.range(self.dim):
            for k in six.moves.range(self.dim):
                expected = {}
                for j in six.moves.range(self.dim):
                    for a, x in six.iteritems(self.entry(i, j)):
                        for b, y in six.iteritems(self.entry(j, k)):
                            sparse_add(expected, {(a, b): x * y})
                if c.comultiply(self.entry(i, k)) != expected:
                    comult = (i, k)
                    break
            if comult is not None:
                break
        result.append(('coproduct', comult))
        counit = None
        for i in six.moves.range(self.dim):
            for j in six.moves.range(self.dim):
                if c.epsilon(self.entry(i, j)) != (field.one if i == j else field.zero):
                    counit = (i, j)
                    break
            if counit is not None:
                break
        result.append(('counit', counit))
        return result

    def __repr__(self):
        return '<Comodule %s of dimension %d>' % (self.name, self.dim)


def check_comodule(v):
    report = Report('comodule %s' % v.name)
    for axiom, witness in v.axiom_witnesses():
        report.add(axiom, witness is None, witness)
    return report


def direct_sum(first, second, name=None):
    matrix = dict(first.matrix)
    n = first.dim
    for (i, j), c in six.iteritems(second.matrix):
        matrix[(n + i, n + j)] = c
    return Comodule(first.coalgebra, n + second.dim, matrix, name=name or '%s+%s' % (first.name, second.name))


def one_dimensional(coalgebra, grouplike, name=None):
    """The comodule v ↦ v ⊗ g for a grouplike g."""
    return Comodule(coalgebra, 1, {(0, 0): grouplike}, name=name)


def comodule_from_representation(coalgebra, group, matrices, name=None):
    """
    Matrix coefficients c_ij = sum_g ρ(g)_ij δ_g of a representation of G, as a
    comodule over k^G (basis δ_g indexed like the group elements).
    :param list matrices: per group element a dense square matrix of scalars
    """
    field = coalgebra.field
    dim = len(matrices[0])
    matrix = {}
    for g in group.elements:
        for i in six.moves.range(dim):
            for j in six.moves.range(dim):
                v = field(matrices[g][i][j])
                if v:
                    matrix.setdefault((i, j), {})[g] = v
    return Comodule(coalgebra, dim, matrix, name=name)


def comodule_character(v):
    """
    χ(V) = sum_i c_ii, certified to be a cotrace.
    :type v: Comodule
    :rtype: Cotrace
    """
    for axiom, witness in v.axiom_witnesses():
        if witness is not None:
            raise ComoduleAxiomError(v.name, axiom, witness=witness)
    element = {}
    for i in six.moves.range(v.dim):
        sparse_add(element, v.entry(i, i))
    return Cotrace(v.coalgebra, element)


def _character_matrix(c, vs):
    columns = {k: comodule_character(v).element for k, v in enumerate(vs)}
    return SparseMat.from_columns(columns, (c.dim, len(vs)), c.field)


def enough_characters(c, vs):
    """
    True iff the characters of vs span the cotrace space of c.
    """
    tr_dim = len(cotrace_basis(c))
    if not vs:
        return tr_dim == 0
    return rank(_character_matrix(c, vs)) == tr_dim


def character_decomposition(c, vs, cotrace):
    """
    Coefficients λ with cotrace = sum λ_V χ(V), or None.
    """
    if not vs:
        return None if cotrace.element else {}
    solution = solve_affine(_character_matrix(c, vs), cotrace.element)
    if solution is None:
        return None
    return solution[0]
