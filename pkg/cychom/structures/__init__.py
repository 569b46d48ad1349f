# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.structures.algebra import Algebra, check_algebra
from cychom.structures.coalgebra import Coalgebra, Cotrace, check_coalgebra, cotrace_basis
from cychom.structures.comodules import (Comodule, character_decomposition, check_comodule, comodule_character,
                                         comodule_from_representation, direct_sum, enough_characters,
                                         one_dimensional)
from cychom.structures.constructors import (dual_numbers, function_algebra_of_group, ground_coalgebra, ground_field,
                                            group_algebra, matrix_algebra, matrix_element, opposite, product_algebra,
                                            square_zero, tensor_algebra, triangular_algebra)
from cychom.structures.groups import FiniteGroup, quaternion_group, small_groups, symmetric_group_s3
from cychom.structures.hopf import HopfAlgebra, check_hopf
