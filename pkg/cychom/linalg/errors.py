# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.base.errors import BaseCychomException


class LinalgError(BaseCychomException):
    pass


class ShapeError(LinalgError):
    code = 100
    msg = 'Shapes do not fit: {left} against {right} in "{operation}".'

    def __init__(self, left, right, operation):
        self.left = left
        self.right = right
        self.operation = operation


class FieldError(LinalgError):
    code = 101
    msg = 'Field characteristic must be 0 or a prime, got {characteristic}.'

    def __init__(self, characteristic):
        self.characteristic = characteristic


class ScalarError(LinalgError):
    code = 102
    msg = 'Can not read "{value}" as an element of {field}.'

    def __init__(self, value, field):
        self.value = value
        self.field = field


class SingularMatrixError(LinalgError):
    code = 103
    msg = 'Matrix of shape {shape} is not invertible: rank {rank}.'

    def __init__(self, shape, rank):
        self.shape = shape
        self.rank = rank


class NotInSubspaceError(LinalgError):
    code = 104
    msg = 'Vector is not in the subspace of dimension {dim}.'

    def __init__(self, dim, witness=None):
        self.dim = dim
        self.witness = witness
