# -*- coding: utf-8 -*-

DEFAULT_FIELD = 'Q'
DEFAULT_MAX_DEGREE = 5
DEFAULT_SEED = 0

THREADS_ENV = 'CYCHOM_THREADS'

# largest m whose chw chain is re-expanded in (A⊗A)^{⊗(m+1)} for the membership check
CHW_MEMBERSHIP_MAX_DEGREE = 2

RANDOM_MAX_DIM = 4
LEMMA_SEEDS = 100
ROWEXT_SEEDS = 20

GROUPLIKE_SEARCH_MAX_DIM = 8
