# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import itertools
import logging

import six

from cychom.chern.chern_weil import chern_weil
from cychom.chern.errors import IdempotentError
from cychom.chern.sequence import KSequence, abstract_character, idempotent_chern
from cychom.galois import es_coring
from cychom.linalg import SparseMat, rref
from cychom.linalg.errors import NotInSubspaceError
from cychom.report import Report
from cychom.structures import (Comodule, character_decomposition, comodule_character, enough_characters,
                               matrix_algebra, matrix_element)
from cychom.utils import sparse_add, sparse_tensor

__all__ = ('chern_galois_chain', 'AssociatedIdempotent', 'associated_idempotent', 'verify_factorization',
           'connection_independence', 'HOMOLOGOUS', 'NOT_HOMOLOGOUS', 'UNDECIDED')

logger = logging.getLogger(__name__)

HOMOLOGOUS = 'homologous'
NOT_HOMOLOGOUS = 'not-homologous'
UNDECIDED = 'undecided'


def _entry_connections(connection, v):
    """ℓ(c_ij) as {(x, y): coefficient} for every matrix coefficient of v."""
    result = {}
    for i in six.moves.range(v.dim):
        for j in six.moves.range(v.dim):
            image = connection(v.entry(i, j))
            if image:
                result[(i, j)] = {divmod(code, connection.dim_a): c for code, c in six.iteritems(image)}
    return result


def _base_coordinates(base, tensor):
    """
    A^{⊗k} tensor keyed by tuples to B^{⊗k} coordinates, with the first coordinate that
    fails to rebuild (None when the tensor lies in B^{⊗k}).
    """
    position = {j: k for k, j in enumerate(base.subspace.free)}
    coords = {}
    for key, v in six.iteritems(tensor):
        slots = tuple(position.get(x) for x in key)
        if None not in slots:
            coords[slots] = v
    rebuilt = {}
    for slots, v in six.iteritems(coords):
        sparse_add(rebuilt, sparse_tensor([base.subspace.basis[s] for s in slots]), v)
    diff = sparse_add(rebuilt, tensor, -base.algebra.field.one)
    return coords, (min(diff) if diff else None)


def chern_galois_chain(ca, connection, v, n):
    """
    The Chern-Galois character of a comodule straight from its matrix coefficients:
    x_m = Σ ℓ²(c_{im i0}) ℓ¹(c_{i0 i1}) ⊗ ℓ²(c_{i0 i1}) ℓ¹(c_{i1 i2}) ⊗ ... over index cycles,
    read in B^{⊗(m+1)}, weighted into Tot CC(B).
    :type v: cychom.structures.Comodule
    :rtype: cychom.chern.CharacterClass
    """
    base = connection.canonical.base
    algebra = ca.algebra
    entries = _entry_connections(connection, v)
    terms = []
    report = Report('Chern-Galois character of %s' % v.name)
    for m in six.moves.range(2 * n + 1):
        tensor = {}
        for cycle in itertools.product(six.moves.range(v.dim), repeat=m + 1):
            legs = [entries.get((cycle[j], cycle[(j + 1) % (m + 1)])) for j in six.moves.range(m + 1)]
            if not all(legs):
                continue
            for choice in itertools.product(*[sorted(six.iteritems(leg)) for leg in legs]):
                coefficient = algebra.field.one
                for _, c in choice:
                    coefficient *= c
                factors = [algebra.multiply_basis(choice[j - 1][0][1], choice[j][0][0]) for j in six.moves.range(m + 1)]
                sparse_add(tensor, sparse_tensor(factors), coefficient)
        coords, witness = _base_coordinates(base, tensor)
        report.add('degree %d lands in B' % m, witness is None, witness)
        terms.append(coords)
    character = abstract_character(KSequence(base.algebra, terms, name='cg(%s)' % v.name), n)
    character.report = report.extend(character.report)
    return character


class AssociatedIdempotent(object):
    """
    E over B from a comodule V and ℓ. The second legs of all ℓ(c_bc) span W ⊂ A with
    echelon basis w_s at pivots p_s, so ℓ(c_bc) = Σ_s u_s^{bc} ⊗ w_s where u_s^{bc}
    is column p_s of the coefficient matrix of ℓ(c_bc). Then
    E_{(b,s),(c,s′)} = w_s u_{s′}^{bc}, indexed b * rank W + s.
    """

    def __init__(self, ca, connection, v):
        self.comodule_algebra = ca
        self.comodule = v
        self.base = base = connection.canonical.base
        algebra = ca.algebra
        field = ca.field
        entries = _entry_connections(connection, v)
        rows, count = {}, 0
        for key in sorted(entries):
            by_first = {}
            for (x, y), c in six.iteritems(entries[key]):
                by_first.setdefault(x, {})[y] = c
            for x in sorted(by_first):
                rows[count] = by_first[x]
                count += 1
        echelon = rref(SparseMat(rows, (max(count, 1), algebra.dim), field)) if count else []
        self.pivots = [p for p, _ in echelon]
        self.w = [row for _, row in echelon]
        r = len(self.w)
        self.rank_w = r
        self.size = v.dim * r
        self.entries = {}
        for (b, c), leg in six.iteritems(entries):
            for t, pivot in enumerate(self.pivots):
                u = {x: coeff for (x, y), coeff in six.iteritems(leg) if y == pivot}
                for s, w in enumerate(self.w):
                    product = algebra.multiply(w, u)
                    try:
                        coords = base.coordinates(product)
                    except NotInSubspaceError:
                        raise IdempotentError(v.name, 'entry outside B', witness=(b, s, c, t))
                    if coords:
                        self.entries[(b * r + s, c * r + t)] = coords
        self.matrices = matrix_algebra(base.algebra, self.size)
        self.vector = matrix_element(base.algebra, self.size, self.entries)
        witness = self.idempotence_witness()
        if witness is not None:
            raise IdempotentError(v.name, 'E^2 != E', witness=witness)
        logger.info('associated idempotent of %s: size %d over %s', v.name, self.size, base.algebra.name)

    def idempotence_witness(self):
        """Label of the first nonzero entry of E² - E, or None."""
        square = self.matrices.multiply(self.vector, self.vector)
        diff = sparse_add(square, self.vector, -self.comodule_algebra.field.one)
        return self.matrices.labels[min(diff)] if diff else None

    def coinvariance_witness(self):
        """First entry (row, column) whose image in A is not coinvariant, or None."""
        ca = self.comodule_algebra
        for key, coords in sorted(six.iteritems(self.entries)):
            b = self.base.embed(coords)
            expected = {(a, c): u * e for a, u in six.iteritems(b) for c, e in six.iteritems(ca.grouplike)}
            if ca.coact(b) != {k: x for k, x in six.iteritems(expected) if x}:
                return key
        return None

    def trace(self):
        """Σ_i E_ii as a B-vector."""
        result = {}
        for i in six.moves.range(self.size):
            sparse_add(result, self.entries.get((i, i), {}))
        return result

    def report(self):
        report = Report('associated idempotent of %s' % self.comodule.name)
        witness = self.coinvariance_witness()
        report.add('entries in B', witness is None, witness)
        witness = self.idempotence_witness()
        report.add('E^2 = E', witness is None, witness)
        report.data['size'] = self.size
        return report

    def __repr__(self):
        return '<AssociatedIdempotent %s, size %d>' % (self.comodule.name, self.size)


def associated_idempotent(ca, connection, v):
    """
    :rtype: AssociatedIdempotent
    :raises IdempotentError:
    """
    return AssociatedIdempotent(ca, connection, v)


def verify_factorization(ca, connection, v, n, es=None):
    """
    Compares chw_n(χ(V)) over B with the Chern-Galois expression (as chains) and with
    the character of the associated idempotent (as classes).
    :rtype: Report
    """
    es = es or es_coring(ca, connection)
    weil = chern_weil(es, connection, comodule_character(v), n)
    galois = chern_galois_chain(ca, connection, v, n)
    idempotent = associated_idempotent(ca, connection, v)
    pushed = idempotent_chern(es.base.algebra, idempotent.size, idempotent.vector, n)

    report = Report('factorization for %s in degree %d' % (v.name, 2 * n))
    report.extend(weil.report, prefix='chern-weil')
    report.extend(galois.report, prefix='chern-galois')
    report.extend(idempotent.report(), prefix='idempotent')
    report.extend(pushed.report, prefix='idempotent character')
    difference = weil.b_level.first_difference(galois)
    report.add('chern-weil equals chern-galois', difference is None, difference)
    witness = weil.b_level.homologous_to(pushed)
    report.add('chern-weil homologous to idempotent character', witness is not None)
    report.data['idempotent_size'] = idempotent.size
    if witness is not None:
        report.data['witness_terms'] = len(witness)
    return report


def connection_independence(ca, target, first, second, n, comodules=None):
    """
    Compares chern_weil for two strong connections, class by class over comodule characters.
    :param target: a Comodule, or a Cotrace decomposed over the characters of comodules
    :rtype: Report with data['verdict'] in homologous, not-homologous, undecided
    """
    report = Report('connection independence on %s in degree %d' % (ca.name, 2 * n))
    if isinstance(target, Comodule):
        pieces = {0: ca.field.one}
        comodules = [target]
    else:
        comodules = list(comodules or [])
        report.data['enough_characters'] = enough_characters(ca.coalgebra, comodules)
        pieces = character_decomposition(ca.coalgebra, comodules, target) if comodules else None
        if pieces is None:
            report.data['verdict'] = UNDECIDED
            report.data['reason'] = 'cotrace is not a combination of the given characters'
            logger.info('connection independence on %s undecided', ca.name)
            return report
    cores = es_coring(ca, first), es_coring(ca, second)
    for k in sorted(pieces):
        character = comodule_character(comodules[k])
        one = chern_weil(cores[0], first, character, n).b_level
        other = chern_weil(cores[1], second, character, n).b_level
        witness = one.homologous_to(other)
        report.add('class of chi(%s) agrees' % comodules[k].name, witness is not None)
    report.data['verdict'] = HOMOLOGOUS if report.passed else NOT_HOMOLOGOUS
    return report
