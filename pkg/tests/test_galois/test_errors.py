# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.galois.errors import (CoactionError, NoStrongConnectionError, NotGaloisError, NotHopfError,
                                  NotPrincipalError, RowIsoError, SectionNotInCotensorError)
from cychom.utils import u


@pytest.mark.parametrize(
    ['e', 'text'],
    (
            (NotGaloisError('X', 2, 2, 4),
             'Code 600. Canonical map of "X" is not bijective: rank 2 for dimensions 2 -> 4.'),
            (NotPrincipalError('X', 3, 4), 'Code 601. Canonical entwining of "X" is singular: rank 3 of 4.'),
            (NoStrongConnectionError('X'),
             'Code 602. No strong connection on "X" solves the lifting and colinearity system.'),
            (SectionNotInCotensorError('X'), 'Code 603. Splitting b -> b⊗1 of "X" leaves the cotensor product.'),
            (NotHopfError('X'), 'Code 604. Comodule algebra "X" has no Hopf algebra attached.'),
            (RowIsoError('X', 'not bijective'), 'Code 605. Block matrix description of "X" fails: not bijective.'),
            (CoactionError('X', 'counit', witness='d0'), 'Code 606. Coaction of "X" violates counit. Witness: d0'),
    )
)
def test_error_messages(e, text):
    assert u(e) == text
