# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import json

import six

from cychom.utils import u

__all__ = ('Certificate', 'Report')


@six.python_2_unicode_compatible
class Certificate(object):
    """
    One checked identity: its name, whether it holds and, if not, a witness.
    """

    def __init__(self, name, passed, witness=None):
        self.name = name
        self.passed = bool(passed)
        self.witness = witness

    def to_dict(self):
        result = {'name': self.name, 'pass': self.passed}
        if self.witness is not None:
            result['witness'] = _jsonable(self.witness)
        return result

    def __str__(self):
        status = 'ok' if self.passed else 'FAILED'
        if self.witness is not None and not self.passed:
            return '%s: %s (witness: %s)' % (self.name, status, u(self.witness))
        return '%s: %s' % (self.name, status)


def _jsonable(value):
    if isinstance(value, (six.text_type, six.integer_types, float, bool)) or value is None:
        return value
    if isinstance(value, dict):
        return {u(k): _jsonable(v) for k, v in six.iteritems(value)}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return u(value)


@six.python_2_unicode_compatible
class Report(object):
    """
    Ordered list of certificates plus free-form data (dims, counts).
    """

    def __init__(self, title):
        self.title = title
        self.certificates = []
        self.data = {}

    def add(self, name, passed, witness=None):
        certificate = Certificate(name, passed, witness)
        self.certificates.append(certificate)
        return certificate

    def extend(self, other, prefix=None):
        for c in other.certificates:
            name = '%s/%s' % (prefix, c.name) if prefix else c.name
            self.certificates.append(Certificate(name, c.passed, c.witness))
        return self

    @property
    def passed(self):
        return all(c.passed for c in self.certificates)

    @property
    def failures(self):
        return [c for c in self.certificates if not c.passed]

    def get(self, name):
        for c in self.certificates:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self):
        result = {
            'title': self.title,
            'certificates': [c.to_dict() for c in self.certificates],
            'pass': self.passed,
        }
        result.update({u(k): _jsonable(v) for k, v in six.iteritems(self.data)})
        return result

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + '\n'

    def __str__(self):
        lines = ['%s: %s' % (self.title, 'pass' if self.passed else 'FAIL')]
        lines.extend('  %s' % u(c) for c in self.certificates)
        return '\n'.join(lines)
