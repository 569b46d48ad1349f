# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.base.errors import BaseCychomException


class InputOutputError(BaseCychomException):
    pass


class CheckSumError(InputOutputError):
    code = 800
    msg = 'Some symbols from line are lost. Src line: {src_line}. Parsed line: {parsed_line}.'

    def __init__(self, src_line, parsed_line):
        self.src_line = src_line
        self.parsed_line = parsed_line


class InputError(InputOutputError):
    code = 801
    msg = 'Malformed input at {location}: {reason}.'

    def __init__(self, location, reason):
        self.location = location
        self.reason = reason
