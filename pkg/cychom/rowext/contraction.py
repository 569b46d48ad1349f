# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom.homology import ChainComplex, ChainMap, GradedMap, Homotopy, homology_dims, kill_contractible, tot_cc
from cychom.homology.cyclic import CyclicModule
from cychom.linalg import SparseMat
from cychom.report import Report
from cychom.rowext.errors import NotNormalizedError, UnitaryModuleError
from cychom.rowext.extension import normalize_cocycle
from cychom.utils import sparse_add

__all__ = ('KernelContraction', 'kernel_contraction', 'epsilon_chain_map', 'certify_epsilon_equivalence',
           'epsilon_tensor')

logger = logging.getLogger(__name__)


class KernelContraction(object):
    """
    Contracting homotopy of ker ε^{⊗(n+1)} ⊆ M^{⊗(n+1)}, acting on adapted basis
    tensors with at least one I-factor: for the last I-factor at position p,
    h inserts σ(e) right after it with sign (-1)^(p+1).
    """

    def __init__(self, re):
        self.extension = re
        self.module = CyclicModule(re.ring)
        self.unit = re.section(re.base.left_unit)

    def last_ideal_position(self, key):
        r = self.extension.ideal_dim
        for p in six.moves.range(len(key) - 1, -1, -1):
            if key[p] < r:
                return p
        return None

    def in_kernel(self, key):
        return self.last_ideal_position(key) is not None

    def homotopy(self, key):
        p = self.last_ideal_position(key)
        if p is None:
            return {}
        one = self.extension.field.one
        sign = one if p % 2 else -one
        head, tail = key[:p + 1], key[p + 1:]
        return {head + (z,) + tail: sign * v for z, v in six.iteritems(self.unit)}

    def kernel_keys(self, n):
        return [key for key in self.module.radix(n).keys() if self.in_kernel(key)]

    def _bh_plus_hb(self, key):
        module = self.module
        result = module.apply('b', self.homotopy(key))
        sparse_add(result, module.apply(self.homotopy, module.b(key)))
        return result

    def check(self, max_degree):
        """
        bh + hb = 1 on every kernel basis tensor of degree <= max_degree.
        :rtype: Report
        """
        one = self.extension.field.one
        labels = self.extension.ring.labels
        report = Report('kernel contraction of %s' % self.extension.ring.name)
        for n in six.moves.range(0, max_degree + 1):
            witness = None
            for key in self.kernel_keys(n):
                if self._bh_plus_hb(key) != {key: one}:
                    witness = tuple(labels[i] for i in key)
                    break
            report.add('bh + hb = 1 on the kernel in degree %d' % n, witness is None, witness)
            logger.debug('kernel contraction degree %d: %s', n, 'pass' if witness is None else 'FAIL')
        return report

    def matrices(self, y, top):
        """
        The kernel as a chain complex X with inclusion ι, projection ρ and h,
        for Y = the Hochschild complex of the ring.
        :rtype: tuple
        """
        field = self.extension.field
        one = field.one
        radix = self.module.radix
        codes = [[radix(n).encode(key) for key in self.kernel_keys(n)] for n in six.moves.range(top + 1)]
        positions = [{code: k for k, code in enumerate(row)} for row in codes]
        iota, rho, h = {}, {}, {}
        for n in six.moves.range(top + 1):
            size = len(codes[n])
            iota[n] = SparseMat.from_columns({k: {code: one} for k, code in enumerate(codes[n])},
                                             (y.dim(n), size), field)
            rho[n] = SparseMat({k: {code: one} for k, code in enumerate(codes[n])}, (size, y.dim(n)), field)
        for n in six.moves.range(top):
            columns = {}
            for k, code in enumerate(codes[n]):
                image = self.homotopy(radix(n).decode(code))
                columns[k] = {positions[n + 1][radix(n + 1).encode(key)]: v for key, v in six.iteritems(image)}
            h[n] = SparseMat.from_columns(columns, (len(codes[n + 1]), len(codes[n])), field)
        diffs = {n: rho[n - 1] * y.d(n) * iota[n] for n in six.moves.range(1, top + 1)}
        x = ChainComplex([len(row) for row in codes], diffs, field=field, name='ker eps')
        return x, ChainMap(x, y, iota), GradedMap(y, x, rho), Homotopy(x, x, h)


def kernel_contraction(re):
    """
    :type re: cychom.rowext.RowExtension
    :rtype: KernelContraction
    :raises UnitaryModuleError: when B has no left unit acting as the identity on M
    :raises NotNormalizedError: when ω is not zero
    """
    witness = re.augmented.unitary_witness()
    if witness is not None:
        raise UnitaryModuleError(re.augmented.name, witness=witness)
    if not re.is_normalized():
        raise NotNormalizedError(re.augmented.name, witness=sorted(re.cocycle_table)[0])
    return KernelContraction(re)


def epsilon_tensor(re, key):
    """ε^{⊗(n+1)} on an adapted basis tensor."""
    r = re.ideal_dim
    if any(k < r for k in key):
        return {}
    return {tuple(k - r for k in key): re.field.one}


def _epsilon_graded(re, source, target, top):
    maps = {}
    for n in six.moves.range(top + 1):
        columns = {}
        offsets_s, offsets_t = source.offsets(n), target.offsets(n)
        for p, q in source.cells(n):
            radix_s, radix_t = source.module.radix(q), target.module.radix(q)
            for code, key in enumerate(radix_s.keys()):
                image = epsilon_tensor(re, key)
                if image:
                    columns[offsets_s[p] + code] = {offsets_t[p] + radix_t.encode(k): v
                                                    for k, v in six.iteritems(image)}
        maps[n] = SparseMat.from_columns(columns, (target.dim(n), source.dim(n)), re.field)
    return ChainMap(source, target, maps)


def epsilon_chain_map(re, mode='full', max_degree=3):
    """
    ε^{⊗(•+1)}: Tot CC(M) -> Tot CC(B), with a report that it commutes with
    b, b′, t, N and with the total differentials.
    :rtype: tuple (ChainMap, Report)
    """
    source = tot_cc(re.ring, mode, max_degree)
    target = tot_cc(re.base, mode, max_degree)
    chain_map = _epsilon_graded(re, source, target, source.top)
    report = Report('epsilon chain map %s' % mode)
    ring_module, base_module = CyclicModule(re.ring), CyclicModule(re.base)
    for n in six.moves.range(0, max_degree + 1):
        for operator in ('b', 'b_prime', 't', 'N'):
            witness = None
            for key in ring_module.radix(n).keys():
                left = base_module.apply(operator, epsilon_tensor(re, key))
                right = {}
                for k, v in six.iteritems(getattr(ring_module, operator)(key)):
                    sparse_add(right, epsilon_tensor(re, k), v)
                if left != right:
                    witness = tuple(re.ring.labels[i] for i in key)
                    break
            report.add('epsilon commutes with %s in degree %d' % (operator, n), witness is None, witness)
    report.extend(chain_map.commutation_report(), prefix='total')
    return chain_map, report


def certify_epsilon_equivalence(re, max_degree=3, cyclic_degree=None):
    """
    Feeds the kernel contraction into kill_contractible for
    ker ε -> CC¹(M) -> CC¹(B), and compares Hochschild and cyclic homology dims.
    A nonzero cocycle is normalized first; the ring changes only up to isomorphism.
    :rtype: Report
    """
    normalization = None
    if not re.is_normalized() and re.base.right_unit is not None:
        re, _, normalization = normalize_cocycle(re)
    contraction = kernel_contraction(re)
    y = tot_cc(re.ring, 'cc1', max_degree)
    z = tot_cc(re.base, 'cc1', max_degree)
    top = y.top
    x, iota, rho, h = contraction.matrices(y, top)
    pi = _epsilon_graded(re, y, z, top)
    one = re.field.one
    sigma = {}
    for n in six.moves.range(top + 1):
        columns = {}
        radix_y, radix_z = y.module.radix(n), z.module.radix(n)
        for code, key in enumerate(radix_z.keys()):
            columns[code] = {radix_y.encode(tuple(k + re.ideal_dim for k in key)): one}
        sigma[n] = SparseMat.from_columns(columns, (y.dim(n), z.dim(n)), re.field)
    result = kill_contractible(x, y, z, iota, pi, rho, GradedMap(z, y, sigma), h)
    report = Report('epsilon equivalence for %s' % re.ring.name)
    if normalization is not None:
        report.extend(normalization, prefix='normalize')
    report.extend(contraction.check(max_degree))
    report.extend(result.report, prefix='kill')
    hh_m, hh_b = homology_dims(y), homology_dims(z)
    report.add('HH dims agree', hh_m == hh_b, None if hh_m == hh_b else {'M': hh_m, 'B': hh_b})
    dims = {'HH(M)': hh_m, 'HH(B)': hh_b}
    if cyclic_degree is not None:
        hc_m = homology_dims(tot_cc(re.ring, 'full', cyclic_degree))
        hc_b = homology_dims(tot_cc(re.base, 'full', cyclic_degree))
        report.add('HC dims agree', hc_m == hc_b, None if hc_m == hc_b else {'M': hc_m, 'B': hc_b})
        dims.update({'HC(M)': hc_m, 'HC(B)': hc_b})
    report.data['dims'] = dims
    logger.info('epsilon equivalence for %s: %s', re.ring.name, 'pass' if report.passed else 'FAIL')
    return report
