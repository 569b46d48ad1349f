# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six

from cychom.utils import u

__all__ = ('BaseCychomException',)


@six.python_2_unicode_compatible
class BaseCychomException(Exception):
    """
    Failed precondition or broken identity. The message template is filled from
    the instance attributes; the witness is the basis element, degree or entry
    where the identity fails.
    """
    code = 0
    msg = ''
    witness = None

    def context(self):
        return {k: u(v) for k, v in six.iteritems(vars(self)) if v is not None}

    def __str__(self):
        text = 'Code %d. %s' % (self.code, self.msg.format(**self.context()))
        if self.witness is not None:
            text += ' Witness: %s' % u(self.witness)
        return text.rstrip()
