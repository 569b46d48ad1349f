# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import six

from cychom.homology.complex import ChainComplex, matrix_witness
from cychom.homology.errors import DegreeError
from cychom.interface import BaseCyclicObject
from cychom.linalg import SparseMat
from cychom.report import Report
from cychom.tensors import MixedRadix
from cychom.utils import cyclic_sign, sparse_add, sparse_items, sparse_scale

__all__ = ('CyclicModule', 'cyclic_operators', 'CyclicChain', 'TotalComplex', 'tot_cc', 'connes_S', 'MODES',
           'column_compatibility_report')

logger = logging.getLogger(__name__)

OPERATORS = ('b', 'b_prime', 't', 'N')

MODES = ('full', 'cc2', 'cc1', 'bar')

# column selections; 'column1' is the second column of CC² on its own
COLUMNS = {'cc2': (0, 1), 'cc1': (0,), 'bar': (1,), 'column1': (1,)}


class CyclicModule(BaseCyclicObject):
    """
    The cyclic object A^{⊗(n+1)} of a finite-dimensional algebra.
    Basis tensors are tuples of basis indices of A.
    """

    def __init__(self, algebra):
        self.algebra = algebra
        self._radix = {}
        self._matrices = {}

    @property
    def field(self):
        return self.algebra.field

    @property
    def factor_dim(self):
        return self.algebra.dim

    def dim(self, n):
        if n < 0:
            return 0
        return self.factor_dim ** (n + 1)

    def radix(self, n):
        if n not in self._radix:
            self._radix[n] = MixedRadix((self.factor_dim,) * (n + 1))
        return self._radix[n]

    def face(self, i, key):
        n = len(key) - 1
        if i < n:
            product = self.algebra.multiply_basis(key[i], key[i + 1])
            head, tail = key[:i], key[i + 2:]
        else:
            product = self.algebra.multiply_basis(key[n], key[0])
            head, tail = (), key[1:n]
        return {head + (k,) + tail: v for k, v in six.iteritems(product)}

    def _faces(self, key, count):
        result = {}
        one = self.field.one
        for i in six.moves.range(count):
            sparse_add(result, self.face(i, key), one if i % 2 == 0 else -one)
        return result

    def b(self, key):
        """Σ (-1)^i d_i, wrap-around face included; zero out of degree 0."""
        n = len(key) - 1
        return self._faces(key, n + 1) if n > 0 else {}

    def b_prime(self, key):
        n = len(key) - 1
        return self._faces(key, n) if n > 0 else {}

    def cyclic(self, key):
        n = len(key) - 1
        return {(key[-1],) + key[:-1]: self.field(cyclic_sign(n))}

    t = cyclic

    def norm(self, key):
        n = len(key) - 1
        sign = self.field(cyclic_sign(n))
        result = {}
        coefficient = self.field.one
        for _ in six.moves.range(n + 1):
            sparse_add(result, {key: coefficient})
            key = (key[-1],) + key[:-1]
            coefficient = coefficient * sign
        return result

    N = norm

    def apply(self, operator, vector):
        """
        Linear extension of a basis-tensor operator to {key: coefficient}.
        :param operator: one of 'b', 'b_prime', 't', 'N' or a callable key -> dict
        """
        if not callable(operator):
            operator = getattr(self, operator)
        result = {}
        for key, c in six.iteritems(vector):
            sparse_add(result, operator(key), c)
        return result

    def matrix(self, operator, n):
        """
        Operator on degree n as a SparseMat; b and b′ map degree n to degree n - 1.
        """
        cache_key = (operator, n)
        if cache_key not in self._matrices:
            source = self.radix(n)
            lowering = operator in ('b', 'b_prime')
            target = self.radix(n - 1) if lowering and n > 0 else source
            target_dim = self.dim(n - 1) if lowering else self.dim(n)
            columns = {}
            method = getattr(self, operator)
            for code, key in enumerate(source.keys()):
                image = method(key)
                if image:
                    columns[code] = {target.encode(k): v for k, v in six.iteritems(image)}
            self._matrices[cache_key] = SparseMat.from_columns(columns, (target_dim, source.size), self.field)
            logger.debug('assembled %s on degree %d of %s', operator, n, self.algebra.name)
        return self._matrices[cache_key]

    def __repr__(self):
        return '<CyclicModule of %s>' % self.algebra.name


def cyclic_operators(a, n):
    """
    b, b′, t and N on A^{⊗(n+1)} as SparseMat.
    :type a: cychom.structures.Algebra
    :rtype: dict
    """
    if n < 0:
        raise DegreeError(n, 0)
    module = CyclicModule(a)
    return {name: module.matrix(name, n) for name in OPERATORS}


def column_compatibility_report(a, max_degree):
    """
    b(1 - t) = (1 - t)b′ and b′N = Nb on every degree 1 .. max_degree.
    """
    module = CyclicModule(a)
    report = Report('bicomplex columns of %s' % a.name)
    for n in six.moves.range(1, max_degree + 1):
        ident_n = SparseMat.identity(module.dim(n), module.field)
        ident_m = SparseMat.identity(module.dim(n - 1), module.field)
        b, bp = module.matrix('b', n), module.matrix('b_prime', n)
        lhs = b * (ident_n - module.matrix('t', n))
        rhs = (ident_m - module.matrix('t', n - 1)) * bp
        report.add('b(1-t) = (1-t)b\' in degree %d' % n, *_passed(matrix_witness(lhs - rhs)))
        lhs = bp * module.matrix('N', n)
        rhs = module.matrix('N', n - 1) * b
        report.add('b\'N = Nb in degree %d' % n, *_passed(matrix_witness(lhs - rhs)))
    return report


class CyclicChain(object):
    """
    Element of Tot CC in a fixed total degree: column p holds a sparse
    element {key: coefficient} of A^{⊗(degree - p + 1)}.
    """

    def __init__(self, module, degree, components=None):
        self.module = module
        self.degree = degree
        self.components = {}
        for p, vector in six.iteritems(components or {}):
            if not 0 <= p <= degree:
                raise DegreeError(p, 0)
            vector = {k: v for k, v in six.iteritems(vector) if v}
            if vector:
                self.components[p] = vector

    @property
    def field(self):
        return self.module.field

    def column(self, p):
        return dict(self.components.get(p, {}))

    def columns(self):
        return sorted(self.components)

    def _combine(self, other, coefficient):
        if other.degree != self.degree:
            raise DegreeError(other.degree, self.degree)
        components = {p: dict(v) for p, v in six.iteritems(self.components)}
        for p, vector in six.iteritems(other.components):
            sparse_add(components.setdefault(p, {}), vector, coefficient)
        return CyclicChain(self.module, self.degree, components)

    def __add__(self, other):
        return self._combine(other, self.field.one)

    def __sub__(self, other):
        return self._combine(other, -self.field.one)

    def __neg__(self):
        return self.scale(-self.field.one)

    def scale(self, c):
        c = self.field(c)
        return CyclicChain(self.module, self.degree,
                           {p: sparse_scale(v, c) for p, v in six.iteritems(self.components)})

    def is_zero(self):
        return not self.components

    def map_slots(self, module, images):
        """
        Push forward by a linear map f: A -> A′ applied on every tensor slot.
        :param module: the cyclic module of A′
        :param images: basis index of A -> {index of A′: coefficient}
        """
        components = {}
        for p, vector in six.iteritems(self.components):
            target = components.setdefault(p, {})
            for key, c in six.iteritems(vector):
                partial = {(): c}
                for i in key:
                    image = images.get(i)
                    if not image:
                        partial = {}
                        break
                    step = {}
                    for prefix, x in six.iteritems(partial):
                        for j, y in six.iteritems(image):
                            sparse_add(step, {prefix + (j,): x * y})
                    partial = step
                sparse_add(target, partial)
        return CyclicChain(module, self.degree, components)

    def __eq__(self, other):
        return (isinstance(other, CyclicChain) and other.degree == self.degree
                and other.components == self.components)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def format(self):
        labels = self.module.algebra.labels
        parts = []
        for p in self.columns():
            for key, c in sparse_items(self.components[p]):
                parts.append('[%d] %s*(%s)' % (p, self.field.to_str(c), ', '.join(labels[i] for i in key)))
        return ' + '.join(parts) or '0'

    def __repr__(self):
        return '<CyclicChain degree %d, columns %s>' % (self.degree, self.columns())


class TotalComplex(ChainComplex):
    """
    Total complex of the cyclic bicomplex, or of one of its column selections,
    truncated at top = max_degree + 1 so that homology through max_degree is exact.
    Column p, row q holds A^{⊗(q+1)} in total degree p + q - shift.
    Columns alternate b (even) and -b′ (odd); rows alternate 1 - t (odd p) and N (even p).
    """

    def __init__(self, algebra, mode='full', max_degree=5):
        if mode != 'full' and mode not in COLUMNS:
            raise ValueError(mode)
        if max_degree < 0:
            raise DegreeError(max_degree, 0)
        self.module = CyclicModule(algebra)
        self.mode = mode
        self.shift = 1 if mode == 'bar' else 0
        self._column_set = COLUMNS.get(mode)
        top = max_degree + 1
        dims = [sum(self.module.dim(q) for _, q in self.cells(n)) for n in six.moves.range(top + 1)]
        super(TotalComplex, self).__init__(dims, field=algebra.field, max_degree=max_degree,
                                           name='%s(%s)' % (mode, algebra.name))

    @property
    def algebra(self):
        return self.module.algebra

    def has_column(self, p):
        return p >= 0 and (self._column_set is None or p in self._column_set)

    def cells(self, n):
        """(p, q) pairs of total degree n in column order."""
        if n < 0:
            return []
        return [(p, n + self.shift - p) for p in six.moves.range(0, n + self.shift + 1)
                if self.has_column(p) and n + self.shift - p >= 0]

    def offsets(self, n):
        offsets, position = {}, 0
        for p, q in self.cells(n):
            offsets[p] = position
            position += self.module.dim(q)
        return offsets

    def chain(self, n, components=None):
        return CyclicChain(self.module, n, components)

    def encode(self, chain):
        n = chain.degree
        offsets = self.offsets(n)
        vector = {}
        for p, component in six.iteritems(chain.components):
            if p not in offsets:
                raise DegreeError(p, 0)
            radix = self.module.radix(n + self.shift - p)
            for key, c in six.iteritems(component):
                vector[offsets[p] + radix.encode(key)] = c
        return vector

    def decode(self, n, vector):
        cells = self.cells(n)
        offsets = self.offsets(n)
        components = {}
        for index, c in six.iteritems(vector):
            for p, q in reversed(cells):
                if index >= offsets[p]:
                    key = self.module.radix(q).decode(index - offsets[p])
                    components.setdefault(p, {})[key] = c
                    break
        return CyclicChain(self.module, n, components)

    def _vertical(self, p):
        if p % 2 == 0:
            return 'b', self.field.one
        return 'b_prime', (self.field.one if self.mode == 'bar' else -self.field.one)

    def _cell_boundary(self, p, key):
        """Total differential of a basis tensor in column p, as {(p′, key′): c}."""
        result = {}
        module = self.module
        if len(key) > 1:
            operator, sign = self._vertical(p)
            for k, v in six.iteritems(getattr(module, operator)(key)):
                sparse_add(result, {(p, k): v}, sign)
        if p >= 1 and self.has_column(p - 1):
            if p % 2:
                sparse_add(result, {(p - 1, key): self.field.one})
                for k, v in six.iteritems(module.t(key)):
                    sparse_add(result, {(p - 1, k): v}, -self.field.one)
            else:
                for k, v in six.iteritems(module.norm(key)):
                    sparse_add(result, {(p - 1, k): v})
        return result

    def total_boundary(self, chain):
        """Total differential without assembling any matrix."""
        components = {}
        for p, component in six.iteritems(chain.components):
            for key, c in six.iteritems(component):
                for (p2, k2), v in six.iteritems(self._cell_boundary(p, key)):
                    sparse_add(components.setdefault(p2, {}), {k2: v}, c)
        return CyclicChain(self.module, chain.degree - 1, components)

    def _build_differential(self, n):
        offsets_source = self.offsets(n)
        offsets_target = self.offsets(n - 1)
        columns = {}
        for p, q in self.cells(n):
            radix = self.module.radix(q)
            for code, key in enumerate(radix.keys()):
                image = {}
                for (p2, k2), v in six.iteritems(self._cell_boundary(p, key)):
                    image[offsets_target[p2] + self.module.radix(len(k2) - 1).encode(k2)] = v
                if image:
                    columns[offsets_source[p] + code] = image
        logger.debug('assembled total differential of %s in degree %d', self.name, n)
        return SparseMat.from_columns(columns, (self.dim(n - 1), self.dim(n)), self.field)

    def __repr__(self):
        return '<TotalComplex %s dims=%s>' % (self.name, self.dims)


def tot_cc(a, mode='full', max_degree=5):
    """
    :param str mode: full, cc2 (columns 0 and 1), cc1 (the Hochschild complex) or bar
    :rtype: TotalComplex
    """
    return TotalComplex(a, mode, max_degree)


def connes_S(chain):
    """
    Periodicity map Tot CC_n -> Tot CC_{n-2}: columns 0 and 1 are dropped, the others move left by two.
    :type chain: CyclicChain
    """
    if chain.degree < 2:
        raise DegreeError(chain.degree, 2)
    return CyclicChain(chain.module, chain.degree - 2,
                       {p - 2: v for p, v in six.iteritems(chain.components) if p >= 2})


def _passed(witness):
    return witness is None, witness
