# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import six

__all__ = ('u', 'cached_property', 'sparse_add', 'sparse_scale', 'sparse_items', 'cyclic_sign', 'sparse_tensor')

if six.PY2:
    def u_from_default_type(v):
        return str(v).decode('utf8')
else:
    u_from_default_type = str


def u(value):
    if isinstance(value, six.binary_type):
        return value.decode('utf8')
    elif isinstance(value, six.text_type):
        return value
    else:
        return u_from_default_type(value)


class cached_property(object):
    def __init__(self, func):
        self.func = func
        self.__doc__ = func.__doc__

    def __get__(self, instance, cls=None):
        if instance is None:
            return self
        result = instance.__dict__[self.func.__name__] = self.func(instance)
        return result


def sparse_add(target, source, coefficient=None):
    """
    target += coefficient * source, in place, dropping zeros.
    Both are dicts key -> field element.
    :rtype: dict
    """
    for key, value in six.iteritems(source):
        if coefficient is not None:
            value = coefficient * value
        total = target.get(key)
        total = value if total is None else total + value
        if total:
            target[key] = total
        else:
            target.pop(key, None)
    return target


def sparse_scale(vector, coefficient):
    if not coefficient:
        return {}
    return {k: coefficient * v for k, v in six.iteritems(vector)}


def sparse_items(vector):
    """Items in key order, so that anything derived from them is deterministic."""
    return sorted(six.iteritems(vector), key=lambda item: item[0])


def cyclic_sign(n):
    """Sign of the cyclic operator t on the degree n component: (-1)^n."""
    return -1 if n % 2 else 1


def sparse_tensor(factors):
    """
    Expansion of a tensor product of sparse vectors into basis tuples.
    [{0: 1, 1: 2}, {3: 1}] -> {(0, 3): 1, (1, 3): 2}
    """
    result = {(): None}
    for factor in factors:
        step = {}
        for prefix, c in six.iteritems(result):
            for i, v in six.iteritems(factor):
                x = v if c is None else c * v
                if x:
                    step[prefix + (i,)] = x
        result = step
        if not result:
            return {}
    return {k: v for k, v in six.iteritems(result) if v is not None}
