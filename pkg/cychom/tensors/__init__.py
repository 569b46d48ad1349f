# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.tensors.element import TensorElem
from cychom.tensors.maps import LinearMap, apply_slotwise, apply_tensor_power
from cychom.tensors.space import BasedSpace, MixedRadix
