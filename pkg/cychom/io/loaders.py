# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import hashlib
import json
import logging
import os
from collections import OrderedDict

import six

from cychom.galois.comodule_algebra import ComoduleAlgebra, check_comodule_algebra
from cychom.io.errors import InputError
from cychom.io.vectors import VectorParser
from cychom.linalg import get_field
from cychom.linalg.errors import LinalgError
from cychom.report import Report
from cychom.structures import (Algebra, Coalgebra, Comodule, Cotrace, HopfAlgebra, check_algebra, check_coalgebra,
                               check_comodule, check_hopf, comodule_character, matrix_element)
from cychom.structures.errors import StructureError
from cychom.tensors import BasedSpace
from cychom.utils import cached_property, sparse_add, u

__all__ = ('DATA_DIR', 'Document', 'load_document', 'resolve')

logger = logging.getLogger(__name__)

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'data')


def resolve(path):
    """
    A path on disk, or the bare name of a bundled document: 'kz2' or 'kz2.json'.
    """
    if os.path.isfile(path):
        return path
    name = os.path.basename(path)
    if not name.endswith('.json'):
        name += '.json'
    bundled = os.path.join(DATA_DIR, name)
    if os.path.isfile(bundled):
        return bundled
    raise InputError(path, 'no such file')


def _key(path, key):
    return '%s.%s' % (path, key) if path else key


def _item(path, i):
    return '%s[%d]' % (path, i)


class Document(object):
    """
    JSON description of algebraic structures. Top level keys, all optional
    except that something must be present:
        algebra   {dim, basis?, mult: [[i, j, k, "p/q"]...], unit?}
        coalgebra {dim, basis?, comult: [[i, j, k, "p/q"]...], counit, grouplike?}
        hopf      {algebra: {...}, comult, counit, grouplike?, antipode: [[i, j, "p/q"]...]}
        coaction  [[i, j, k, "p/q"]...] meaning ρ(a_i) contains p/q a_j ⊗ c_k
        comodules [{name, dim, matrix: [[i, j, C-vector]...]}...]
        cotraces  {name: C-vector}
        idempotent {size, entries: [[i, j, A-vector]...]}
    Vectors are expressions over basis labels ("d0 - 1/2*d1"), dense lists of
    literals or {label: literal} objects. Literals are strings or integers.
    """

    def __init__(self, raw, source='<input>', field=None):
        if isinstance(raw, six.text_type):
            raw = raw.encode('utf-8')
        self.raw = raw
        self.source = source
        try:
            self.data = json.loads(raw.decode('utf-8'), object_pairs_hook=OrderedDict)
        except (UnicodeDecodeError, ValueError) as e:
            raise InputError(source, 'invalid JSON (%s)' % u(e))
        if not isinstance(self.data, dict):
            raise InputError(source, 'top level must be an object')
        if field is None:
            try:
                field = get_field(self.data.get('field', 'Q'), self.data.get('prime'))
            except LinalgError as e:
                raise InputError('field', u(e))
        self.field = field
        default_name = os.path.splitext(os.path.basename(source))[0]
        self.name = u(self.data.get('name', default_name))

    @classmethod
    def load(cls, path, field=None):
        path = resolve(path)
        with open(path, 'rb') as fp:
            raw = fp.read()
        logger.debug('Loaded %s (%d bytes)', path, len(raw))
        return cls(raw, source=path, field=field)

    @property
    def digest(self):
        return hashlib.sha256(self.raw).hexdigest()

    def has(self, key):
        return key in self.data

    # primitives

    def _get(self, block, key, path, types=None, required=True):
        if not isinstance(block, dict):
            raise InputError(path, 'expected an object')
        if key not in block:
            if required:
                raise InputError(_key(path, key), 'missing')
            return None
        value = block[key]
        if types is not None and not isinstance(value, types):
            raise InputError(_key(path, key), 'unexpected %s' % type(value).__name__)
        return value

    def _index(self, value, bound, path):
        if isinstance(value, bool) or not isinstance(value, six.integer_types) or not 0 <= value < bound:
            raise InputError(path, 'index must be an integer in [0, %d)' % bound)
        return value

    def _scalar(self, value, path):
        if isinstance(value, bool) or not isinstance(value, six.string_types + six.integer_types):
            raise InputError(path, 'literals are integers or "p/q" strings')
        try:
            return self.field(value)
        except LinalgError as e:
            raise InputError(path, u(e))

    def _vector(self, value, space, path, unit=None):
        if isinstance(value, six.string_types):
            return VectorParser(space.labels, self.field, unit=unit).parse(value, location=path)
        result = {}
        if isinstance(value, list):
            if len(value) != space.dim:
                raise InputError(path, 'expected %d coordinates' % space.dim)
            for i, literal in enumerate(value):
                sparse_add(result, {i: self._scalar(literal, _item(path, i))})
            return result
        if isinstance(value, dict):
            for label, literal in six.iteritems(value):
                if not space.has_label(label):
                    raise InputError(_key(path, label), 'unknown basis label "%s"' % label)
                sparse_add(result, {space.index(label): self._scalar(literal, _key(path, label))})
            return result
        raise InputError(path, 'expected a vector')

    def _space(self, block, path):
        basis = self._get(block, 'basis', path, list, required=False)
        dim = self._get(block, 'dim', path, six.integer_types, required=basis is None)
        if basis is None:
            if dim < 1:
                raise InputError(_key(path, 'dim'), 'dimension must be positive')
            return BasedSpace.numbered('e', dim, self.field)
        if dim is not None and dim != len(basis):
            raise InputError(_key(path, 'basis'), 'expected %d labels' % dim)
        if not basis or not all(isinstance(label, six.string_types) for label in basis):
            raise InputError(_key(path, 'basis'), 'labels must be non-empty strings')
        try:
            return BasedSpace(basis, self.field)
        except ValueError as e:
            raise InputError(_key(path, 'basis'), u(e))

    def _rows(self, block, key, path, width, bounds):
        """
        [[i, j, ..., "p/q"]...] -> [((i, j, ...), c)]
        """
        rows = self._get(block, key, path, list)
        path = _key(path, key)
        result = []
        for r, row in enumerate(rows):
            location = _item(path, r)
            if not isinstance(row, list) or len(row) != width + 1:
                raise InputError(location, 'expected %d indices and a coefficient' % width)
            indices = tuple(self._index(row[x], bounds[x], _item(location, x)) for x in six.moves.range(width))
            result.append((indices, self._scalar(row[width], _item(location, width))))
        return result

    # structures

    def _algebra(self, block, path, name):
        space = self._space(block, path)
        dim = space.dim
        mult = {}
        for (i, j, k), c in self._rows(block, 'mult', path, 3, (dim, dim, dim)):
            sparse_add(mult.setdefault((i, j), {}), {k: c})
        unit = self._get(block, 'unit', path, required=False)
        if unit is not None:
            unit = self._vector(unit, space, _key(path, 'unit'))
        return Algebra(space, mult, left_unit=unit, name=u(block.get('name', name)), validate=False)

    def _coalgebra(self, block, path, name, space=None):
        space = space or self._space(block, path)
        dim = space.dim
        comult = {}
        for (i, j, k), c in self._rows(block, 'comult', path, 3, (dim, dim, dim)):
            sparse_add(comult.setdefault(i, {}), {(j, k): c})
        counit = self._vector(self._get(block, 'counit', path), space, _key(path, 'counit'))
        grouplike = self._get(block, 'grouplike', path, required=False)
        if grouplike is not None:
            grouplike = self._vector(grouplike, space, _key(path, 'grouplike'))
        return Coalgebra(space, comult, counit, grouplike=grouplike, name=u(block.get('name', name)),
                         validate=False)

    @cached_property
    def hopf(self):
        if not self.has('hopf'):
            return None
        block = self._get(self.data, 'hopf', '', dict)
        algebra = self._algebra(self._get(block, 'algebra', 'hopf', dict), 'hopf.algebra', 'H')
        coalgebra = self._coalgebra(block, 'hopf', algebra.name, space=algebra.space)
        antipode = {}
        for (i, j), c in self._rows(block, 'antipode', 'hopf', 2, (algebra.dim, algebra.dim)):
            sparse_add(antipode.setdefault(i, {}), {j: c})
        return HopfAlgebra(algebra, coalgebra, antipode, name=algebra.name, validate=False)

    @cached_property
    def algebra(self):
        if self.has('algebra'):
            return self._algebra(self._get(self.data, 'algebra', '', dict), 'algebra', 'A')
        if self.hopf is not None:
            return self.hopf.algebra
        raise InputError(self.source, 'no algebra')

    @cached_property
    def coalgebra(self):
        if self.has('coalgebra'):
            return self._coalgebra(self._get(self.data, 'coalgebra', '', dict), 'coalgebra', 'C')
        if self.hopf is not None:
            return self.hopf.coalgebra
        raise InputError(self.source, 'no coalgebra')

    @cached_property
    def comodule_algebra(self):
        if not self.has('coaction'):
            raise InputError(self.source, 'no coaction')
        algebra, coalgebra = self.algebra, self.coalgebra
        coaction = {}
        bounds = (algebra.dim, algebra.dim, coalgebra.dim)
        for (i, j, k), c in self._rows(self.data, 'coaction', '', 3, bounds):
            sparse_add(coaction.setdefault(i, {}), {(j, k): c})
        return ComoduleAlgebra(algebra, coalgebra, coaction, hopf=self.hopf, name=self.name, validate=False)

    @cached_property
    def comodules(self):
        result = OrderedDict()
        blocks = self._get(self.data, 'comodules', '', list, required=False)
        if not blocks:
            return result
        coalgebra = self.coalgebra
        for n, block in enumerate(blocks):
            path = _item('comodules', n)
            name = u(self._get(block, 'name', path, six.string_types))
            dim = self._get(block, 'dim', path, six.integer_types)
            if dim < 1:
                raise InputError(_key(path, 'dim'), 'dimension must be positive')
            matrix = {}
            for r, row in enumerate(self._get(block, 'matrix', path, list)):
                location = _item(_key(path, 'matrix'), r)
                if not isinstance(row, list) or len(row) != 3:
                    raise InputError(location, 'expected [i, j, vector]')
                i = self._index(row[0], dim, _item(location, 0))
                j = self._index(row[1], dim, _item(location, 1))
                sparse_add(matrix.setdefault((i, j), {}), self._vector(row[2], coalgebra.space, _item(location, 2)))
            if name in result:
                raise InputError(_key(path, 'name'), 'duplicate comodule "%s"' % name)
            result[name] = Comodule(coalgebra, dim, matrix, name=name, validate=False)
        return result

    def comodule(self, name):
        try:
            return self.comodules[name]
        except KeyError:
            raise InputError('comodules', 'no comodule named "%s"' % name)

    @cached_property
    def cotraces(self):
        """
        Named cotraces, then the characters of the comodules under their own names.
        """
        result = OrderedDict()
        block = self._get(self.data, 'cotraces', '', dict, required=False) or {}
        for name, value in six.iteritems(block):
            path = _key('cotraces', name)
            element = self._vector(value, self.coalgebra.space, path)
            try:
                result[u(name)] = Cotrace(self.coalgebra, element)
            except StructureError as e:
                raise InputError(path, u(e))
        for name, v in six.iteritems(self.comodules):
            if name not in result:
                try:
                    result[name] = comodule_character(v)
                except StructureError as e:
                    raise InputError(_key('comodules', name), u(e))
        return result

    def cotrace(self, name):
        try:
            return self.cotraces[name]
        except KeyError:
            raise InputError('cotraces', 'no cotrace named "%s"' % name)

    @cached_property
    def idempotent(self):
        """
        :rtype: (int, dict) the size n and an M_n(A)-vector
        """
        block = self._get(self.data, 'idempotent', '', dict)
        size = self._get(block, 'size', 'idempotent', six.integer_types)
        if size < 1:
            raise InputError('idempotent.size', 'size must be positive')
        algebra = self.algebra
        entries = {}
        for r, row in enumerate(self._get(block, 'entries', 'idempotent', list)):
            location = _item('idempotent.entries', r)
            if not isinstance(row, list) or len(row) != 3:
                raise InputError(location, 'expected [i, j, vector]')
            i = self._index(row[0], size, _item(location, 0))
            j = self._index(row[1], size, _item(location, 1))
            unit = algebra.left_unit
            entries[(i, j)] = self._vector(row[2], algebra.space, _item(location, 2), unit=unit)
        return size, matrix_element(algebra, size, entries)

    def check(self):
        """
        Axiom certificates of everything the document declares.
        :rtype: cychom.report.Report
        """
        report = Report('axioms of %s' % self.name)
        if self.has('hopf'):
            hopf = self.hopf
            report.extend(check_algebra(hopf.algebra), prefix=hopf.name)
            report.extend(check_coalgebra(hopf.coalgebra), prefix=hopf.name)
            report.extend(check_hopf(hopf), prefix=hopf.name)
        if self.has('algebra'):
            report.extend(check_algebra(self.algebra), prefix=self.algebra.name)
        if self.has('coalgebra'):
            report.extend(check_coalgebra(self.coalgebra), prefix=self.coalgebra.name)
        if self.has('coaction'):
            report.extend(check_comodule_algebra(self.comodule_algebra), prefix='coaction')
        for name, v in six.iteritems(self.comodules):
            report.extend(check_comodule(v), prefix='comodule %s' % name)
        report.data['dims'] = self.dims()
        return report

    def dims(self):
        dims = OrderedDict()
        for key in ('algebra', 'coalgebra'):
            if self.has(key) or self.has('hopf'):
                dims[key] = getattr(self, key).dim
        return dims


def load_document(path, field=None):
    """
    :rtype: Document
    """
    return Document.load(path, field=field)
