# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import re

from cychom.io import tokens
from cychom.io.errors import CheckSumError

__all__ = ('Lexer', 'TokensLine')

# numbers before labels, so "12" never starts a label
EXPRESSION_TOKENS = (
    tokens.NumberToken,
    tokens.LabelToken,
    tokens.AddToken,
    tokens.SubtractToken,
    tokens.MultiplyToken,
    tokens.SpaceToken,
)


class TokensLine(list):
    """Tokens of one expression without the blanks, plus the text they came from."""

    def __init__(self, line):
        super(TokensLine, self).__init__()
        self.src_line = line


class Lexer(object):
    """
    Splits a linear combination over basis labels into tokens. Text that no token
    matches is skipped by the regex scan, so the consumed text must rebuild the line.
    """

    def __init__(self, token_types=EXPRESSION_TOKENS):
        self.token_types = {c.__name__: c for c in token_types}
        self.pattern = re.compile('|'.join(c.group_pattern() for c in token_types), flags=re.UNICODE)

    def parse(self, line):
        """
        :rtype: TokensLine
        :raises CheckSumError: when some symbols belong to no token
        """
        result = TokensLine(line)
        consumed = []
        for match in self.pattern.finditer(line):
            token = self.token_types[match.lastgroup](match)
            consumed.append(token.src_value)
            if not isinstance(token, tokens.SpaceToken):
                result.append(token)

        parsed_line = ''.join(consumed)
        if parsed_line != line:
            raise CheckSumError(line, parsed_line)
        return result
