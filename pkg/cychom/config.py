# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import os

from sympy import isprime

from cychom import settings
from cychom.base.errors import BaseCychomException
from cychom.linalg import get_field
from cychom.utils import cached_property

__all__ = ('ConfigError', 'SessionConfig')


class ConfigError(BaseCychomException):
    code = 900
    msg = 'Invalid session option {option}: {reason}.'

    def __init__(self, option, reason):
        self.option = option
        self.reason = reason


class SessionConfig(object):
    """
    Options shared by every computation of one invocation.
    """

    def __init__(self, field=settings.DEFAULT_FIELD, prime=None, max_degree=settings.DEFAULT_MAX_DEGREE,
                 seed=settings.DEFAULT_SEED, threads=None):
        if field not in ('Q', 'Fp'):
            raise ConfigError('field', 'expected Q or Fp')
        if field == 'Fp' and prime is None:
            raise ConfigError('prime', 'Fp needs --prime')
        if field == 'Q' and prime is not None:
            raise ConfigError('prime', 'only meaningful with --field Fp')
        if prime is not None and not isprime(prime):
            raise ConfigError('prime', '%d is not prime' % prime)
        if max_degree < 0:
            raise ConfigError('max_degree', 'must be non-negative')
        if seed < 0:
            raise ConfigError('seed', 'must be non-negative')
        if threads is None:
            threads = self.threads_from_env()
        if threads < 1:
            raise ConfigError('threads', 'must be at least 1')
        self.field_name = field
        self.prime = prime
        self.max_degree = max_degree
        self.seed = seed
        self.threads = threads

    @staticmethod
    def threads_from_env():
        value = os.environ.get(settings.THREADS_ENV)
        if not value:
            return 1
        try:
            return int(value)
        except ValueError:
            raise ConfigError(settings.THREADS_ENV, '"%s" is not an integer' % value)

    @cached_property
    def field(self):
        """
        :rtype: cychom.linalg.Field
        """
        return get_field(self.field_name, self.prime)

    def describe(self):
        """Canonical option string, part of the inputs digest."""
        if self.prime is None:
            field = self.field_name
        else:
            field = '%s%d' % (self.field_name, self.prime)
        return 'field=%s;D=%d;seed=%d' % (field, self.max_degree, self.seed)
