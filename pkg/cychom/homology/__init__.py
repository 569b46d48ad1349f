# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.homology.complex import ChainComplex, ChainMap, GradedMap, Homotopy, homologous, homology_dims
from cychom.homology.cyclic import (CyclicChain, CyclicModule, TotalComplex, column_compatibility_report, connes_S,
                                    cyclic_operators, tot_cc)
from cychom.homology.lemmas import (LemmaResult, bar_contraction, conjugation_homotopy, hochschild_equivalence, invert,
                                    kill_contractible, kill_contractible_quotient, matrix_stability)
from cychom.homology.samples import SplitSequence, random_invertible, random_split_sequence
