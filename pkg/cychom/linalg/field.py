# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from fractions import Fraction

import six
from sympy import isprime
from sympy.polys.domains import GF, QQ

from cychom.linalg.errors import FieldError, ScalarError

__all__ = ('Field', 'RATIONALS', 'get_field')


class Field(object):
    """
    Ground field of a session: the rationals or a prime field.
    Elements are the sympy domain elements, never python floats.
    """

    def __init__(self, characteristic=0):
        if characteristic < 0 or characteristic and not isprime(characteristic):
            raise FieldError(characteristic)
        self.characteristic = characteristic
        self.domain = QQ if characteristic == 0 else GF(characteristic)
        self.zero = self.domain.zero
        self.one = self.domain.one

    @property
    def name(self):
        return 'Q' if self.characteristic == 0 else 'F%d' % self.characteristic

    def __call__(self, value):
        if isinstance(value, bool):
            raise ScalarError(value, self.name)
        if isinstance(value, six.integer_types):
            return self.domain(value)
        if isinstance(value, Fraction):
            return self.quotient(value.numerator, value.denominator)
        if isinstance(value, six.string_types):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise ScalarError(value, self.name)
            return self.quotient(value.numerator, value.denominator)
        if self.domain.of_type(value):
            return value
        raise ScalarError(value, self.name)

    def quotient(self, numerator, denominator):
        if self.characteristic and denominator % self.characteristic == 0:
            raise ScalarError('%s/%s' % (numerator, denominator), self.name)
        if denominator == 1:
            return self.domain(numerator)
        return self.domain(numerator) / self.domain(denominator)

    def to_str(self, x):
        if self.characteristic:
            return six.text_type(int(x) % self.characteristic)
        return six.text_type(self.domain.to_sympy(x))

    def factorial(self, n):
        result = self.one
        for k in six.moves.range(2, n + 1):
            result *= self.domain(k)
        return result

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('Field', self.characteristic))

    def __repr__(self):
        return '<Field %s>' % self.name


RATIONALS = Field(0)


def get_field(name='Q', prime=None):
    """
    'Q' -> rationals
    'Fp' with prime -> GF(prime)
    """
    if name in ('Q', 'QQ'):
        return RATIONALS
    if name in ('Fp', 'GF') and prime is not None:
        return Field(int(prime))
    raise FieldError(prime if prime is not None else name)
