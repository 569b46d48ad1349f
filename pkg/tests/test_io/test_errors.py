# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.io.errors import CheckSumError, InputError
from cychom.utils import u


def test_check_sum_error_class():
    src_line = 'd0 ^ d1'
    parsed_line = 'd0  d1'

    e = CheckSumError(src_line=src_line, parsed_line=parsed_line)
    template = 'Code 800. Some symbols from line are lost. Src line: {src_line}. Parsed line: {parsed_line}.'
    assert u(e) == template.format(src_line=src_line, parsed_line=parsed_line)

    with pytest.raises(CheckSumError):
        raise e


def test_input_error_class():
    e = InputError(location='algebra.mult[0][2]', reason='index must be an integer in [0, 1)')
    assert u(e) == 'Code 801. Malformed input at algebra.mult[0][2]: index must be an integer in [0, 1).'
