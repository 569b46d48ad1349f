# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import pytest

from cychom.rowext.errors import (NoRightUnitError, NotLeftLinearError, NotNormalizedError, SectionError,
                                  UnitaryModuleError)
from cychom.utils import u


@pytest.mark.parametrize(
    ['e', 'text'],
    (
            (SectionError('augmentation is not surjective'),
             'Code 500. Splitting is not usable: augmentation is not surjective.'),
            (NotLeftLinearError('M', witness='e0'), 'Code 501. Augmentation of "M" is not left linear. Witness: e0'),
            (NoRightUnitError('L'), 'Code 502. Base algebra "L" has no right unit.'),
            (UnitaryModuleError('twisted line', witness='i'),
             'Code 503. Left unit of "twisted line" does not act as the identity on the module. Witness: i'),
            (NotNormalizedError('M'), 'Code 504. Cocycle of "M" is not zero, normalize it first.'),
    )
)
def test_error_messages(e, text):
    assert u(e) == text
