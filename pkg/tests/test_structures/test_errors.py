# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.structures.errors import (ComoduleAxiomError, CotraceError, HopfAxiomError, InvalidGroupError,
                                      NonAssociativeError, NonCoassociativeError, UnitError)
from cychom.utils import u


def test_non_associative_error_class():
    e = NonAssociativeError(name='A', witness='(a, a, a)')
    assert u(e) == 'Code 300. Multiplication of "A" is not associative. Witness: (a, a, a)'

    with pytest.raises(NonAssociativeError):
        raise e


@pytest.mark.parametrize(
    ['e', 'text'],
    (
            (InvalidGroupError(reason='no identity'), 'Code 301. Invalid group table: no identity.'),
            (ComoduleAxiomError(name='V', axiom='counit'), 'Code 302. Comodule "V" violates the counit axiom.'),
            (CotraceError(), 'Code 303. Element is not a cotrace: its coproduct is not flip symmetric.'),
            (NonCoassociativeError(name='C', axiom='coassociativity'),
             'Code 304. Coalgebra "C" violates the coassociativity axiom.'),
            (UnitError(name='A'), 'Code 305. Declared left unit of "A" does not act as identity.'),
            (HopfAxiomError(name='H', axiom='antipode left'),
             'Code 306. Hopf algebra "H" violates the antipode left axiom.'),
    )
)
def test_error_messages(e, text):
    assert u(e) == text
