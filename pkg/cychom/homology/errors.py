# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.base.errors import BaseCychomException


class HomologyError(BaseCychomException):
    pass


class PreconditionError(HomologyError):
    code = 400
    msg = 'Identity ({label}) fails in degree {degree}.'

    def __init__(self, label, degree, witness=None):
        self.label = label
        self.degree = degree
        self.witness = witness


class NoLeftUnitError(HomologyError):
    code = 401
    msg = 'Algebra "{name}" has no left unit.'

    def __init__(self, name):
        self.name = name


class NotInvertibleError(HomologyError):
    code = 402
    msg = 'Element {element} of "{name}" is not invertible.'

    def __init__(self, name, element):
        self.name = name
        self.element = element


class DegreeError(HomologyError):
    code = 403
    msg = 'Degree {degree} is not allowed here, need at least {minimum}.'

    def __init__(self, degree, minimum):
        self.degree = degree
        self.minimum = minimum


class NotACycleError(HomologyError):
    code = 404
    msg = 'Chain of degree {degree} is not a cycle.'

    def __init__(self, degree, witness=None):
        self.degree = degree
        self.witness = witness


class CertificateError(HomologyError):
    code = 405
    msg = 'Certificate "{name}" fails.'

    def __init__(self, name, witness=None):
        self.name = name
        self.witness = witness
