# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.chern.chern_galois import (HOMOLOGOUS, NOT_HOMOLOGOUS, UNDECIDED, AssociatedIdempotent,
                                       associated_idempotent, chern_galois_chain, connection_independence,
                                       verify_factorization)
from cychom.chern.chern_weil import ChernWeilResult, chern_weil, chw_chain, chw_sequence, chw_tensor
from cychom.chern.sequence import (CharacterClass, KSequence, abstract_character, character_coefficient,
                                   idempotent_chern, idempotent_sequence, trace_chain)
