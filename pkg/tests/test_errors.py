# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.base.errors import BaseCychomException
from cychom.utils import u


class SampleError(BaseCychomException):
    code = 7
    msg = 'Entry {row} of "{name}" is wrong.'

    def __init__(self, row, name=None, witness=None):
        self.row = row
        self.name = name
        self.witness = witness


def test_base_error():
    assert u(BaseCychomException()) == 'Code 0.'
    assert u(SampleError(3, name='E')) == 'Code 7. Entry 3 of "E" is wrong.'
    assert u(SampleError(3, name='E', witness=(0, 1))) == 'Code 7. Entry 3 of "E" is wrong. Witness: (0, 1)'
    assert SampleError(3, name='E').context() == {'row': '3', 'name': 'E'}
