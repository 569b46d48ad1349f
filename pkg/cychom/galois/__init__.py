# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.galois.bundles import (cyclic_double_cover, hopf_self_bundle, self_bundle_connection, subgroup_bundle,
                                   trivial_bundle, trivial_bundle_connection)
from cychom.galois.canonical import (CanonicalMap, Entwining, canonical_map, check_translation_map, entwining,
                                     translation_map)
from cychom.galois.comodule_algebra import (ComoduleAlgebra, InvariantSubalgebra, check_comodule_algebra, invariants,
                                            trivial_coaction)
from cychom.galois.connection import ConnectionSystem, StrongConnection, solve_strong_connection
from cychom.galois.coring import ESCoring, RowIsomorphism, cotensor, es_coring, row_iso_omega
