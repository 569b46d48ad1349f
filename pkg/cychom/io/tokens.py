# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

__all__ = ('NumberToken', 'LabelToken', 'AddToken', 'SubtractToken', 'MultiplyToken', 'SpaceToken',
           'OperandToken', 'OperationToken')


class Token(object):
    """
    One lexeme of a linear combination, holding the matched text.
    The class name doubles as the regex group name.
    """
    pattern = None

    def __init__(self, match):
        self.src_value = match.group(0)

    @classmethod
    def group_pattern(cls):
        return r'(?P<%s>%s)' % (cls.__name__, cls.pattern)

    def __repr__(self):
        return '%s(%r)' % (self.__class__.__name__, self.src_value)


class OperandToken(Token):
    pass


class NumberToken(OperandToken):
    """Integer or p/q literal, kept as text until a field reads it."""
    pattern = r'\d+(/\d+)?(?![\w(])'


class LabelToken(OperandToken):
    pattern = r"[A-Za-z_][\w'()]*"


class OperationToken(Token):
    pass


class AddToken(OperationToken):
    pattern = r'\+'


class SubtractToken(OperationToken):
    pattern = r'\-'


class MultiplyToken(OperationToken):
    pattern = r'\*'


class SpaceToken(Token):
    pattern = r'[ \t\n]+'
