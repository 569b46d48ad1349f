# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.base.errors import BaseCychomException


class ChernError(BaseCychomException):
    pass


class KSequenceError(ChernError):
    code = 700
    msg = 'Sequence violates the {condition} condition in degree {degree}.'

    def __init__(self, condition, degree, witness=None):
        self.condition = condition
        self.degree = degree
        self.witness = witness


class NotIdempotentError(ChernError):
    code = 701
    msg = 'Element of "{name}" is not idempotent.'

    def __init__(self, name, witness=None):
        self.name = name
        self.witness = witness


class CotensorEscapeError(ChernError):
    code = 702
    msg = 'Chern-Weil chain of degree {degree} leaves the cotensor power.'

    def __init__(self, degree, witness=None):
        self.degree = degree
        self.witness = witness


class IdempotentError(ChernError):
    code = 703
    msg = 'Associated idempotent of "{name}" is invalid: {reason}.'

    def __init__(self, name, reason, witness=None):
        self.name = name
        self.reason = reason
        self.witness = witness
