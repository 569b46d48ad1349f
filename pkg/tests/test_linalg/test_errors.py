# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.linalg.errors import FieldError, NotInSubspaceError, ScalarError, ShapeError, SingularMatrixError
from cychom.utils import u


def test_shape_error_class():
    e = ShapeError(left=(2, 3), right=(2, 3), operation='compose')
    assert u(e) == 'Code 100. Shapes do not fit: (2, 3) against (2, 3) in "compose".'

    with pytest.raises(ShapeError):
        raise e


def test_field_error_class():
    e = FieldError(characteristic=4)
    assert u(e) == 'Code 101. Field characteristic must be 0 or a prime, got 4.'


def test_scalar_error_class():
    e = ScalarError(value='1/0', field='Q')
    assert u(e) == 'Code 102. Can not read "1/0" as an element of Q.'


def test_singular_matrix_error_class():
    e = SingularMatrixError(shape=(2, 2), rank=1)
    assert u(e) == 'Code 103. Matrix of shape (2, 2) is not invertible: rank 1.'


def test_not_in_subspace_error_class():
    e = NotInSubspaceError(dim=2, witness=3)
    assert u(e) == 'Code 104. Vector is not in the subspace of dimension 2. Witness: 3'
