# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom.homology.complex import ChainMap, GradedMap, Homotopy, homology_dims, matrix_witness
from cychom.homology.cyclic import tot_cc
from cychom.homology.errors import NoLeftUnitError, NotInvertibleError, PreconditionError
from cychom.linalg import SparseMat, solve_affine
from cychom.report import Report
from cychom.structures.constructors import matrix_algebra
from cychom.utils import sparse_add, sparse_tensor

__all__ = ('LemmaResult', 'kill_contractible', 'kill_contractible_quotient', 'bar_contraction', 'matrix_stability',
           'conjugation_homotopy', 'hochschild_equivalence', 'check_split_sequence', 'invert')

logger = logging.getLogger(__name__)


class LemmaResult(object):
    """
    Maps and homotopies built by one of the homotopy lemmas together with the
    report certifying them.
    """

    def __init__(self, report, chain_map=None, homotopy=None, inclusion=None, trace=None, complex=None):
        self.report = report
        self.chain_map = chain_map
        self.homotopy = homotopy
        self.inclusion = inclusion
        self.trace = trace
        self.complex = complex

    @property
    def sigma_tilde(self):
        return self.chain_map

    @property
    def rho_tilde(self):
        return self.chain_map

    @property
    def h_tilde(self):
        return self.homotopy

    @property
    def passed(self):
        return self.report.passed


def _identity(c, n):
    return SparseMat.identity(c.dim(n), c.field)


def _require(label, n, difference):
    witness = matrix_witness(difference)
    if witness is not None:
        raise PreconditionError(label, n, witness='row %d, basis vector %d' % witness)


def _graded(cls, source, target, maps):
    if isinstance(maps, GradedMap):
        return maps
    return cls(source, target, maps)


def _check_contraction(c, h, top):
    for n in six.moves.range(0, top):
        total = c.d(n + 1) * h[n]
        if n > 0:
            total = total + h[n - 1] * c.d(n)
        _require('hd', n, total - _identity(c, n))


def check_split_sequence(x, y, z, iota, pi, rho, sigma, top):
    """
    Identities dd .. rs of a graded-split short exact sequence X -> Y -> Z in degrees <= top.
    :raises PreconditionError: naming the first violated identity
    """
    for c in (x, y, z):
        for n in six.moves.range(2, top + 1):
            _require('dd', n, c.d(n - 1) * c.d(n))
    for n in six.moves.range(1, top + 1):
        _require('di', n, y.d(n) * iota[n] - iota[n - 1] * x.d(n))
    for n in six.moves.range(1, top + 1):
        _require('dp', n, z.d(n) * pi[n] - pi[n - 1] * y.d(n))
    for n in six.moves.range(0, top + 1):
        _require('pi', n, pi[n] * iota[n])
        _require('ps', n, pi[n] * sigma[n] - _identity(z, n))
        _require('ri', n, rho[n] * iota[n] - _identity(x, n))
        _require('sp+ir', n, sigma[n] * pi[n] + iota[n] * rho[n] - _identity(y, n))
        _require('rs', n, rho[n] * sigma[n])


def _passed(witness):
    return witness is None, witness


def kill_contractible(x, y, z, iota, pi, rho, sigma, h):
    """
    For a graded-split X -> Y -> Z with contracting homotopy h of X, builds
    h̃ = ιhρ and σ̃ = (1 - h̃d)σ and certifies πσ̃ = 1, dσ̃ = σ̃d and
    σ̃π + dh̃ + h̃d = 1.
    :type x: cychom.homology.ChainComplex
    :rtype: LemmaResult
    """
    top = min(x.top, y.top, z.top)
    iota = _graded(ChainMap, x, y, iota)
    pi = _graded(ChainMap, y, z, pi)
    rho = _graded(GradedMap, y, x, rho)
    sigma = _graded(GradedMap, z, y, sigma)
    h = _graded(Homotopy, x, x, h)
    check_split_sequence(x, y, z, iota, pi, rho, sigma, top)
    _check_contraction(x, h, top)

    h_tilde = Homotopy(y, y, {n: iota[n + 1] * h[n] * rho[n] for n in six.moves.range(0, top)})
    sigma_tilde = {}
    for n in six.moves.range(0, top + 1):
        if n == 0:
            sigma_tilde[n] = sigma[n]
        else:
            sigma_tilde[n] = sigma[n] - h_tilde[n - 1] * y.d(n) * sigma[n]
    sigma_tilde = ChainMap(z, y, sigma_tilde)

    report = Report('kill contractible subcomplex')
    for n in six.moves.range(0, top + 1):
        report.add('right_inverse in degree %d' % n,
                   *_passed(matrix_witness(pi[n] * sigma_tilde[n] - _identity(z, n))))
    for n in six.moves.range(1, top + 1):
        report.add('chain_map in degree %d' % n,
                   *_passed(matrix_witness(y.d(n) * sigma_tilde[n] - sigma_tilde[n - 1] * z.d(n))))
    for n in six.moves.range(0, top):
        total = sigma_tilde[n] * pi[n] + y.d(n + 1) * h_tilde[n]
        if n > 0:
            total = total + h_tilde[n - 1] * y.d(n)
        report.add('ho_inverse in degree %d' % n, *_passed(matrix_witness(total - _identity(y, n))))
    logger.info('kill_contractible through degree %d: %s', top, 'pass' if report.passed else 'FAIL')
    return LemmaResult(report, chain_map=sigma_tilde, homotopy=h_tilde)


def kill_contractible_quotient(x, y, z, iota, pi, rho, sigma, h):
    """
    Dual construction for a contractible quotient Z with contracting homotopy h:
    h̃ = σhπ and ρ̃ = ρ(1 - dh̃), certified by ρ̃ι = 1, dρ̃ = ρ̃d and
    ιρ̃ + dh̃ + h̃d = 1 through degree top - 1.
    :rtype: LemmaResult
    """
    top = min(x.top, y.top, z.top)
    iota = _graded(ChainMap, x, y, iota)
    pi = _graded(ChainMap, y, z, pi)
    rho = _graded(GradedMap, y, x, rho)
    sigma = _graded(GradedMap, z, y, sigma)
    h = _graded(Homotopy, z, z, h)
    check_split_sequence(x, y, z, iota, pi, rho, sigma, top)
    _check_contraction(z, h, top)

    h_tilde = Homotopy(y, y, {n: sigma[n + 1] * h[n] * pi[n] for n in six.moves.range(0, top)})
    rho_tilde = ChainMap(y, x, {n: rho[n] - rho[n] * y.d(n + 1) * h_tilde[n] for n in six.moves.range(0, top)})

    report = Report('kill contractible quotient')
    for n in six.moves.range(0, top):
        report.add('left_inverse in degree %d' % n,
                   *_passed(matrix_witness(rho_tilde[n] * iota[n] - _identity(x, n))))
    for n in six.moves.range(1, top):
        report.add('chain_map in degree %d' % n,
                   *_passed(matrix_witness(x.d(n) * rho_tilde[n] - rho_tilde[n - 1] * y.d(n))))
    for n in six.moves.range(0, top):
        total = iota[n] * rho_tilde[n] + y.d(n + 1) * h_tilde[n]
        if n > 0:
            total = total + h_tilde[n - 1] * y.d(n)
        report.add('ho_inverse in degree %d' % n, *_passed(matrix_witness(total - _identity(y, n))))
    logger.info('kill_contractible_quotient through degree %d: %s', top - 1, 'pass' if report.passed else 'FAIL')
    return LemmaResult(report, chain_map=rho_tilde, homotopy=h_tilde)


def _left_multiplier(vector):
    """key -> Σ vector_z (z,) + key"""

    def apply(key):
        return {(z,) + key: v for z, v in six.iteritems(vector)}

    return apply


def _key_matrix(source_radix, target_radix, target_dim, field, operator):
    columns = {}
    for code, key in enumerate(source_radix.keys()):
        image = operator(key)
        if image:
            columns[code] = {target_radix.encode(k): v for k, v in six.iteritems(image)}
    return SparseMat.from_columns(columns, (target_dim, source_radix.size), field)


def bar_contraction(a, max_degree=5):
    """
    h(b0 ⊗ .. ⊗ bn) = e ⊗ b0 ⊗ .. ⊗ bn for a left unit e, with b′h + hb′ = 1 in degrees <= max_degree.
    :rtype: LemmaResult
    :raises NoLeftUnitError:
    """
    e = a.left_unit
    if e is None:
        raise NoLeftUnitError(a.name)
    c = tot_cc(a, 'bar', max_degree)
    module = c.module
    maps = {}
    for n in six.moves.range(0, max_degree + 1):
        maps[n] = _key_matrix(module.radix(n), module.radix(n + 1), c.dim(n + 1), c.field, _left_multiplier(e))
    h = Homotopy(c, c, maps)
    report = h.identity_report(lambda n: _identity(c, n), max_degree, name="b'h + hb' = 1")
    report.title = 'bar contraction of %s' % a.name
    return LemmaResult(report, homotopy=h, complex=c)


def _require_unit(b):
    if b.unit is None:
        raise NoLeftUnitError(b.name)
    return b.unit


def matrix_stability(b, n, max_degree=3):
    """
    inc: C(B) -> C(M_n(B)) into the (1, 1) corner, the generalized trace tr and
    the homotopy h with tr inc = 1 and 1 - inc tr = dh + hd on the Hochschild complexes.
    :rtype: LemmaResult
    """
    unit = _require_unit(b)
    m = matrix_algebra(b, n)
    dim = b.dim
    source = tot_cc(b, 'cc1', max_degree)
    target = tot_cc(m, 'cc1', max_degree)
    field = b.field
    one = field.one

    def split(x):
        ij, k = divmod(x, dim)
        i, j = divmod(ij, n)
        return i, j, k

    def trace(key):
        entries = [split(x) for x in key]
        for s, (i, j, k) in enumerate(entries):
            if j != entries[(s + 1) % len(entries)][0]:
                return {}
        return {tuple(k for _, _, k in entries): one}

    def homotopy(key):
        entries = [split(x) for x in key]
        q = len(key) - 1
        result = {}
        for depth in six.moves.range(0, q + 1):
            # E_{i0,1}(β⁰) ⊗ E_11(β¹) .. E_11(β^depth) ⊗ E_{1,i}(1) ⊗ β^{depth+1} ..
            if any(entries[s - 1][1] != entries[s][0] for s in six.moves.range(1, depth + 1)):
                continue
            i0, _, k0 = entries[0]
            head = [{i0 * n * dim + k0: one}]
            head.extend({entries[s][2]: one} for s in six.moves.range(1, depth + 1))
            last = entries[depth][1]
            head.append({last * dim + z: v for z, v in six.iteritems(unit)})
            head.extend({x: one} for x in key[depth + 1:])
            sparse_add(result, sparse_tensor(head), one if depth % 2 == 0 else -one)
        return result

    inc, tr, h = {}, {}, {}
    for q in six.moves.range(0, max_degree + 1):
        inc[q] = _key_matrix(source.module.radix(q), target.module.radix(q), target.dim(q), field,
                             lambda key: {key: one})
        tr[q] = _key_matrix(target.module.radix(q), source.module.radix(q), source.dim(q), field, trace)
        h[q] = _key_matrix(target.module.radix(q), target.module.radix(q + 1), target.dim(q + 1), field, homotopy)
    inc = ChainMap(source, target, inc)
    tr = ChainMap(target, source, tr)
    h = Homotopy(target, target, h)

    report = Report('matrix stability for M%d(%s)' % (n, b.name))
    for q in six.moves.range(0, max_degree + 1):
        report.add('tr inc = 1 in degree %d' % q, *_passed(matrix_witness(tr[q] * inc[q] - _identity(source, q))))
    report.extend(inc.commutation_report(max_degree), prefix='inc')
    report.extend(tr.commutation_report(max_degree), prefix='tr')
    report.extend(h.identity_report(lambda q: _identity(target, q) - inc[q] * tr[q], max_degree,
                                    name='dh + hd = 1 - inc tr'))
    logger.info('matrix stability M%d(%s) through degree %d: %s', n, b.name, max_degree,
                'pass' if report.passed else 'FAIL')
    return LemmaResult(report, homotopy=h, inclusion=inc, trace=tr, complex=target)


def invert(a, u):
    """
    Two-sided inverse of u in a unital algebra.
    :raises NotInvertibleError:
    """
    unit = _require_unit(a)
    solution = solve_affine(a.left_multiplication_matrix(u), unit)
    if solution is None or a.multiply(solution[0], u) != unit:
        raise NotInvertibleError(a.name, a.format(u))
    return solution[0]


def conjugation_homotopy(b, n, gamma, max_degree=2):
    """
    Homotopy h(a0 ⊗ .. ⊗ aq) = Σ_i (-1)^i a0γ⁻¹ ⊗ γa1γ⁻¹ ⊗ .. ⊗ γaiγ⁻¹ ⊗ γ ⊗ a(i+1) ⊗ .. ⊗ aq
    on the Hochschild complex of M_n(B), certified by dh + hd = 1 - conj_γ.
    :param gamma: element of M_n(B) as {index: coefficient}
    :rtype: LemmaResult
    """
    m = matrix_algebra(b, n)
    gamma_inv = invert(m, gamma)
    c = tot_cc(m, 'cc1', max_degree)
    field = m.field
    one = field.one
    conj = {x: m.multiply(m.multiply(gamma, {x: one}), gamma_inv) for x in six.moves.range(m.dim)}
    first = {x: m.multiply({x: one}, gamma_inv) for x in six.moves.range(m.dim)}

    def homotopy(key):
        result = {}
        for i in six.moves.range(0, len(key)):
            factors = [first[key[0]]]
            factors.extend(conj[x] for x in key[1:i + 1])
            factors.append(gamma)
            factors.extend({x: one} for x in key[i + 1:])
            sparse_add(result, sparse_tensor(factors), one if i % 2 == 0 else -one)
        return result

    def conjugate(key):
        return sparse_tensor([conj[x] for x in key])

    radix = c.module.radix
    h = Homotopy(c, c, {q: _key_matrix(radix(q), radix(q + 1), c.dim(q + 1), field, homotopy)
                        for q in six.moves.range(0, max_degree + 1)})
    conj_map = ChainMap(c, c, {q: _key_matrix(radix(q), radix(q), c.dim(q), field, conjugate)
                               for q in six.moves.range(0, max_degree + 1)})
    report = Report('conjugation by %s' % m.format(gamma))
    report.extend(conj_map.commutation_report(max_degree), prefix='conj')
    report.extend(h.identity_report(lambda q: _identity(c, q) - conj_map[q], max_degree,
                                    name='dh + hd = 1 - conj'))
    logger.info('conjugation homotopy on %s through degree %d: %s', m.name, max_degree,
                'pass' if report.passed else 'FAIL')
    return LemmaResult(report, chain_map=conj_map, homotopy=h, complex=c)


def _block(rows_dim, cols_dim, row_offset, col_offset, size, field):
    one = field.one
    return SparseMat({row_offset + i: {col_offset + i: one} for i in six.moves.range(size)},
                     (rows_dim, cols_dim), field)


def hochschild_equivalence(a, max_degree=3):
    """
    Tot CC² ≃ CC¹: column 0 is a subcomplex whose quotient, the bar column, is
    contractible when A has a left unit. The retraction ρ̃ comes from
    kill_contractible_quotient; homology dims of both sides are compared.
    :rtype: LemmaResult
    """
    e = a.left_unit
    if e is None:
        raise NoLeftUnitError(a.name)
    x = tot_cc(a, 'cc1', max_degree)
    y = tot_cc(a, 'cc2', max_degree)
    z = tot_cc(a, 'column1', max_degree)
    field = a.field
    iota, pi, rho, sigma, h = {}, {}, {}, {}, {}
    for n in six.moves.range(0, y.top + 1):
        xd, yd, zd = x.dim(n), y.dim(n), z.dim(n)
        iota[n] = _block(yd, xd, 0, 0, xd, field)
        rho[n] = _block(xd, yd, 0, 0, xd, field)
        sigma[n] = _block(yd, zd, xd, 0, zd, field)
        pi[n] = _block(zd, yd, 0, xd, zd, field)
    minus_e = {k: -v for k, v in six.iteritems(e)}
    for n in six.moves.range(1, z.top):
        h[n] = _key_matrix(z.module.radix(n - 1), z.module.radix(n), z.dim(n + 1), field,
                           _left_multiplier(minus_e))
    result = kill_contractible_quotient(x, y, z, iota, pi, rho, sigma, h)
    report = result.report
    report.title = 'Tot CC2 ~ CC1 for %s' % a.name
    hh, hh2 = homology_dims(x), homology_dims(y)
    report.data['dims'] = {'cc1': hh, 'cc2': hh2}
    report.add('homology dims agree', hh == hh2, None if hh == hh2 else {'cc1': hh, 'cc2': hh2})
    result.complex = y
    return result
