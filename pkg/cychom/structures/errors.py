# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.base.errors import BaseCychomException


class StructureError(BaseCychomException):
    pass


class NonAssociativeError(StructureError):
    code = 300
    msg = 'Multiplication of "{name}" is not associative.'

    def __init__(self, name, witness=None):
        self.name = name
        self.witness = witness


class InvalidGroupError(StructureError):
    code = 301
    msg = 'Invalid group table: {reason}.'

    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness


class ComoduleAxiomError(StructureError):
    code = 302
    msg = 'Comodule "{name}" violates the {axiom} axiom.'

    def __init__(self, name, axiom, witness=None):
        self.name = name
        self.axiom = axiom
        self.witness = witness


class CotraceError(StructureError):
    code = 303
    msg = 'Element is not a cotrace: its coproduct is not flip symmetric.'

    def __init__(self, witness=None):
        self.witness = witness


class NonCoassociativeError(StructureError):
    code = 304
    msg = 'Coalgebra "{name}" violates the {axiom} axiom.'

    def __init__(self, name, axiom, witness=None):
        self.name = name
        self.axiom = axiom
        self.witness = witness


class UnitError(StructureError):
    code = 305
    msg = 'Declared left unit of "{name}" does not act as identity.'

    def __init__(self, name, witness=None):
        self.name = name
        self.witness = witness


class HopfAxiomError(StructureError):
    code = 306
    msg = 'Hopf algebra "{name}" violates the {axiom} axiom.'

    def __init__(self, name, axiom, witness=None):
        self.name = name
        self.axiom = axiom
        self.witness = witness
