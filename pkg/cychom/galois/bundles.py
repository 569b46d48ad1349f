# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six

from cychom.galois.comodule_algebra import ComoduleAlgebra
from cychom.structures import FiniteGroup, function_algebra_of_group, tensor_algebra
from cychom.utils import sparse_add

__all__ = ('hopf_self_bundle', 'trivial_bundle', 'subgroup_bundle', 'cyclic_double_cover', 'self_bundle_connection',
           'trivial_bundle_connection')


def hopf_self_bundle(hopf):
    """H coacting on itself by Δ; the invariants are k·1."""
    coaction = {i: dict(d) for i, d in six.iteritems(hopf.coalgebra.comult)}
    return ComoduleAlgebra(hopf.algebra, hopf.coalgebra, coaction, hopf=hopf, name='%s over itself' % hopf.name)


def trivial_bundle(base, hopf):
    """A = B ⊗ H with ρ(b ⊗ h) = b ⊗ h(1) ⊗ h(2)."""
    algebra = tensor_algebra(base, hopf.algebra)
    dim_h = hopf.dim
    coaction = {}
    for x in six.moves.range(base.dim):
        for h in six.moves.range(dim_h):
            coaction[x * dim_h + h] = {(x * dim_h + h1, h2): v
                                       for (h1, h2), v in six.iteritems(hopf.coalgebra.comult.get(h, {}))}
    return ComoduleAlgebra(algebra, hopf.coalgebra, coaction, hopf=hopf,
                           name='%s x %s' % (base.name, hopf.name))


def subgroup_bundle(group, subgroup, field):
    """
    k^G over k^K for a subgroup K acting by right translation:
    ρ(δ_x) = Σ_{k ∈ K} δ_{x k⁻¹} ⊗ δ_k.
    :param subgroup: indices of the elements of K in G
    """
    k_group, indices = group.subgroup(subgroup)
    algebra = function_algebra_of_group(group, field).algebra
    hopf = function_algebra_of_group(k_group, field)
    one = field.one
    coaction = {}
    for x in group.elements:
        coaction[x] = {(group.multiply(x, group.inverse(g)), k): one for k, g in enumerate(indices)}
    return ComoduleAlgebra(algebra, hopf.coalgebra, coaction, hopf=hopf,
                           name='k^%s over k^%s' % (group.name, k_group.name))


def cyclic_double_cover(n, field):
    """k^{Z/2n} over k^{Z/2}, the subgroup {0, n} acting by translation."""
    return subgroup_bundle(FiniteGroup.cyclic(2 * n), [0, n], field)


def self_bundle_connection(hopf):
    """ℓ(h) = S(h(1)) ⊗ h(2), table c_k -> encoded H⊗H vector."""
    dim = hopf.dim
    table = {}
    for k in six.moves.range(dim):
        value = {}
        for (h1, h2), v in six.iteritems(hopf.coalgebra.comult.get(k, {})):
            for s, w in six.iteritems(hopf.antipode.get(h1, {})):
                sparse_add(value, {s * dim + h2: v * w})
        table[k] = value
    return table


def trivial_bundle_connection(base, hopf):
    """ℓ(h) = (1 ⊗ S(h(1))) ⊗ (1 ⊗ h(2)) on A = B ⊗ H."""
    dim_h = hopf.dim
    dim_a = base.dim * dim_h
    unit = base.unit
    table = {}
    for k, value in six.iteritems(self_bundle_connection(hopf)):
        lifted = {}
        for code, v in six.iteritems(value):
            s, h = divmod(code, dim_h)
            for x, u in six.iteritems(unit):
                for y, w in six.iteritems(unit):
                    sparse_add(lifted, {(x * dim_h + s) * dim_a + y * dim_h + h: v * u * w})
        table[k] = lifted
    return table
