# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.io import tokens
from cychom.io.errors import InputError
from cychom.io.lexer import Lexer
from cychom.linalg.errors import ScalarError
from cychom.utils import sparse_add, u

__all__ = ('VectorParser', 'parse_vector')

SIGNS = (tokens.AddToken, tokens.SubtractToken)


class VectorParser(object):
    """
    Linear combinations of basis labels: "d0 - d2", "1/2*x + 3". A bare number is
    a multiple of the unit, which must then be given as a sparse vector.
    """

    def __init__(self, labels, field, unit=None, lexer=None):
        self.index = {label: i for i, label in enumerate(labels)}
        self.field = field
        self.unit = unit
        self.lexer = lexer or Lexer()

    def parse(self, line, location='vector'):
        tokens_line = self.lexer.parse(line)
        result = {}
        size = len(tokens_line)
        position = 0
        while position < size:
            sign = 1
            while position < size and isinstance(tokens_line[position], SIGNS):
                if isinstance(tokens_line[position], tokens.SubtractToken):
                    sign = -sign
                position += 1
            coefficient, label, position = self._term(tokens_line, position, location)
            coefficient = coefficient * self.field(sign)
            if label is None:
                if self.unit is None:
                    raise InputError(location, 'constant term without a unit')
                sparse_add(result, self.unit, coefficient)
            else:
                sparse_add(result, {self.index[label]: coefficient})
            if position < size and not isinstance(tokens_line[position], SIGNS):
                raise InputError(location, 'unexpected "%s"' % tokens_line[position].src_value)
            if position == size - 1:
                raise InputError(location, 'expression ends with an operator')
        return result

    def _number(self, token, location):
        try:
            return self.field(token.src_value)
        except ScalarError as e:
            raise InputError(location, u(e))

    def _label(self, token, location):
        if token.src_value not in self.index:
            raise InputError(location, 'unknown basis label "%s"' % token.src_value)
        return token.src_value

    def _term(self, tokens_line, position, location):
        size = len(tokens_line)
        if position >= size:
            raise InputError(location, 'expression ends with an operator')
        token = tokens_line[position]
        if isinstance(token, tokens.LabelToken):
            return self.field.one, self._label(token, location), position + 1
        if not isinstance(token, tokens.NumberToken):
            raise InputError(location, 'unexpected "%s"' % token.src_value)
        coefficient = self._number(token, location)
        position += 1
        if position < size and isinstance(tokens_line[position], tokens.MultiplyToken):
            position += 1
            if position >= size or not isinstance(tokens_line[position], tokens.LabelToken):
                raise InputError(location, 'expected a basis label after "*"')
        if position < size and isinstance(tokens_line[position], tokens.LabelToken):
            return coefficient, self._label(tokens_line[position], location), position + 1
        return coefficient, None, position


def parse_vector(line, labels, field, unit=None, location='vector'):
    """
    :rtype: dict basis index -> field element
    """
    return VectorParser(labels, field, unit=unit).parse(line, location=location)
