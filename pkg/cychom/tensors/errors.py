# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.base.errors import BaseCychomException


class TensorError(BaseCychomException):
    pass


class FactorMismatchError(TensorError):
    code = 200
    msg = 'Tensor factors {got} do not match the expected {expected}.'

    def __init__(self, got, expected):
        self.got = got
        self.expected = expected


class IndexOutOfRangeError(TensorError):
    code = 201
    msg = 'Multi-index {index} is out of range for dimensions {dims}.'

    def __init__(self, index, dims):
        self.index = index
        self.dims = dims
