# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.homology.errors import (CertificateError, DegreeError, NoLeftUnitError, NotACycleError,
                                    NotInvertibleError, PreconditionError)
from cychom.utils import u


def test_precondition_error_class():
    e = PreconditionError(label='ps', degree=2, witness='row 0, basis vector 1')
    assert u(e) == 'Code 400. Identity (ps) fails in degree 2. Witness: row 0, basis vector 1'

    with pytest.raises(PreconditionError):
        raise e


@pytest.mark.parametrize(
    ['e', 'text'],
    (
            (NoLeftUnitError(name='sq0(2)'), 'Code 401. Algebra "sq0(2)" has no left unit.'),
            (NotInvertibleError(name='M2(k)', element='E11(1)'),
             'Code 402. Element E11(1) of "M2(k)" is not invertible.'),
            (DegreeError(degree=1, minimum=2), 'Code 403. Degree 1 is not allowed here, need at least 2.'),
            (NotACycleError(degree=3), 'Code 404. Chain of degree 3 is not a cycle.'),
            (CertificateError(name='cycle'), 'Code 405. Certificate "cycle" fails.'),
    )
)
def test_error_messages(e, text):
    assert u(e) == text
