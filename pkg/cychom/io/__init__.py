# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.io.lexer import Lexer, TokensLine
from cychom.io.loaders import DATA_DIR, Document, load_document, resolve
from cychom.io.vectors import VectorParser, parse_vector
