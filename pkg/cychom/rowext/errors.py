# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.base.errors import BaseCychomException


class RowExtensionError(BaseCychomException):
    pass


class SectionError(RowExtensionError):
    code = 500
    msg = 'Splitting is not usable: {reason}.'

    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness


class NotLeftLinearError(RowExtensionError):
    code = 501
    msg = 'Augmentation of "{name}" is not left linear.'

    def __init__(self, name, witness=None):
        self.name = name
        self.witness = witness


class NoRightUnitError(RowExtensionError):
    code = 502
    msg = 'Base algebra "{name}" has no right unit.'

    def __init__(self, name):
        self.name = name


class UnitaryModuleError(RowExtensionError):
    code = 503
    msg = 'Left unit of "{name}" does not act as the identity on the module.'

    def __init__(self, name, witness=None):
        self.name = name
        self.witness = witness


class NotNormalizedError(RowExtensionError):
    code = 504
    msg = 'Cocycle of "{name}" is not zero, normalize it first.'

    def __init__(self, name, witness=None):
        self.name = name
        self.witness = witness
