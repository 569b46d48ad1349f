# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.linalg.field import RATIONALS, Field, get_field
from cychom.linalg.matrix import SparseMat
from cychom.linalg.solve import image_basis, inverse, kernel_basis, rank, rref, solve_affine
from cychom.linalg.subspace import Quotient, Subspace
