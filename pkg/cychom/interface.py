# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals


class BaseCyclicObject(object):
    """
    Base class of cyclic modules X_n = V^{⊗(n+1)} acting on basis tensors,
    i.e. tuples of n + 1 basis indices of V
    """

    @property
    def field(self):
        raise NotImplementedError

    @property
    def factor_dim(self):
        """
        :rtype: int
        """
        raise NotImplementedError

    def face(self, i, key):
        """
        d_i of a basis tensor of degree n = len(key) - 1, 0 <= i <= n
        (a0, a1, a2) -> {(a0*a1, a2): c} for i = 0
        :type i: int
        :type key: tuple
        :rtype: dict
        """
        raise NotImplementedError

    def cyclic(self, key):
        """
        Signed cyclic operator t on a basis tensor
        :type key: tuple
        :rtype: dict
        """
        raise NotImplementedError
