# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.linalg import RATIONALS
from cychom.structures import Algebra, Coalgebra
from cychom.tensors import BasedSpace

Q = RATIONALS


def left_unital_algebra(validate=True):
    """e e = e, e x = x, all other products zero: e is a left unit and there is no right unit."""
    one = Q.one
    space = BasedSpace(['e', 'x'], Q)
    return Algebra(space, {(0, 0): {0: one}, (0, 1): {1: one}}, name='L', validate=validate)


def non_associative_algebra(validate=True):
    one = Q.one
    space = BasedSpace(['a', 'b'], Q)
    return Algebra(space, {(0, 0): {1: one}, (1, 0): {0: one}}, name='bad', validate=validate)


def non_coassociative_coalgebra(validate=True):
    one = Q.one
    space = BasedSpace(['c0', 'c1'], Q)
    comult = {0: {(0, 0): one}, 1: {(1, 1): one, (0, 1): one}}
    return Coalgebra(space, comult, {0: one, 1: one}, name='bad', validate=validate)
