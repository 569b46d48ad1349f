# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from cychom.homology import homology_dims, tot_cc
from cychom.io import load_document

__author__ = 'cychom contributors'
__version__ = '0.2.0'


def cyclic_homology(path, mode='full', max_degree=4, field=None):
    """
    Homology dimensions of Tot CC of the algebra described by a JSON document.
    """
    document = load_document(path, field=field)
    return homology_dims(tot_cc(document.algebra, mode, max_degree=max_degree))
