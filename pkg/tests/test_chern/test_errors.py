# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.chern.errors import CotensorEscapeError, IdempotentError, KSequenceError, NotIdempotentError
from cychom.utils import u


@pytest.mark.parametrize(
    ['e', 'text'],
    (
            (KSequenceError('t', 1), 'Code 700. Sequence violates the t condition in degree 1.'),
            (NotIdempotentError('k2', witness='e0'), 'Code 701. Element of "k2" is not idempotent. Witness: e0'),
            (CotensorEscapeError(2), 'Code 702. Chern-Weil chain of degree 2 leaves the cotensor power.'),
            (IdempotentError('V', 'E^2 != E'), 'Code 703. Associated idempotent of "V" is invalid: E^2 != E.'),
    )
)
def test_error_messages(e, text):
    assert u(e) == text
