# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest
from six.moves import zip

from cychom.io import Lexer, tokens
from cychom.io.errors import CheckSumError


@pytest.fixture(scope='module')
def lexer():
    return Lexer()


@pytest.mark.parametrize(
    ['line', 'token_types'],
    (
            ('d0', [tokens.LabelToken]),
            ('3', [tokens.NumberToken]),
            ('d0 - d2', [tokens.LabelToken, tokens.SubtractToken, tokens.LabelToken]),
            ('1/2*x + 3',
             [tokens.NumberToken, tokens.MultiplyToken, tokens.LabelToken, tokens.AddToken, tokens.NumberToken]),
            ('-E01(1)', [tokens.SubtractToken, tokens.LabelToken]),
            ('2 e1', [tokens.NumberToken, tokens.LabelToken]),
            ('', []),
    )
)
def test_parse(lexer, line, token_types):
    parsed_line = lexer.parse(line)
    assert len(parsed_line) == len(token_types), 'Len of tokens lines not equal'
    assert parsed_line.src_line == line

    for c, token in zip(token_types, parsed_line):
        assert isinstance(token, c)


@pytest.mark.parametrize('line', ('d0 ^ d1', '2x', 'd0 / 2', '1.5*d0'))
def test_lost_symbols(lexer, line):
    with pytest.raises(CheckSumError):
        lexer.parse(line)
