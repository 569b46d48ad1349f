# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.rowext.contraction import (KernelContraction, certify_epsilon_equivalence, epsilon_chain_map,
                                       epsilon_tensor, kernel_contraction)
from cychom.rowext.extension import AugmentedModule, RowExtension, normalize_cocycle, row_extension
from cychom.rowext.samples import free_augmented_module, line_extension, random_augmented_module
