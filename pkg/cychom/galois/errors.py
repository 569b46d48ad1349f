# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.base.errors import BaseCychomException


class GaloisError(BaseCychomException):
    pass


class NotGaloisError(GaloisError):
    code = 600
    msg = 'Canonical map of "{name}" is not bijective: rank {rank} for dimensions {source} -> {target}.'

    def __init__(self, name, rank, source, target):
        self.name = name
        self.rank = rank
        self.source = source
        self.target = target


class NotPrincipalError(GaloisError):
    code = 601
    msg = 'Canonical entwining of "{name}" is singular: rank {rank} of {dim}.'

    def __init__(self, name, rank, dim):
        self.name = name
        self.rank = rank
        self.dim = dim


class NoStrongConnectionError(GaloisError):
    code = 602
    msg = 'No strong connection on "{name}" solves the lifting and colinearity system.'

    def __init__(self, name):
        self.name = name


class SectionNotInCotensorError(GaloisError):
    code = 603
    msg = 'Splitting b -> b⊗1 of "{name}" leaves the cotensor product.'

    def __init__(self, name, witness=None):
        self.name = name
        self.witness = witness


class NotHopfError(GaloisError):
    code = 604
    msg = 'Comodule algebra "{name}" has no Hopf algebra attached.'

    def __init__(self, name):
        self.name = name


class RowIsoError(GaloisError):
    code = 605
    msg = 'Block matrix description of "{name}" fails: {reason}.'

    def __init__(self, name, reason, witness=None):
        self.name = name
        self.reason = reason
        self.witness = witness


class CoactionError(GaloisError):
    code = 606
    msg = 'Coaction of "{name}" violates {axiom}.'

    def __init__(self, name, axiom, witness=None):
        self.name = name
        self.axiom = axiom
        self.witness = witness
