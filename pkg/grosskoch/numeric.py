# -*- coding: utf-8 -*-

# Copyright 2024 Juca Crispim <juca@poraodojuca.dev>

# This file is part of grosskoch.

# grosskoch is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# grosskoch is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.

# You should have received a copy of the GNU Affero General Public License
# along with grosskoch. If not, see <http://www.gnu.org/licenses/>.

__doc__ = """Exact numbers used by everything else: rationals, prime
factorization of rationals and integer powers.

Rationals are :class:`fractions.Fraction` instances, so they are always
reduced at construction, have a positive denominator and zero is 0/1.
"""

from fractions import Fraction
from math import isqrt
import operator

from sympy import sieve

from .exceptions import (DivisionByZero, ZeroFactorization,
                         FactorizationTooLarge, ZeroToNonpositive)

Rational = Fraction

# Largest magnitude (numerator or denominator) we try to factor.
FACTOR_LIMIT = 10 ** 12

# A map prime -> exponent
PrimePowerMap = dict

_OPERATIONS = {
    '+': operator.add,
    '-': operator.sub,
    '−': operator.sub,
    '*': operator.mul,
    '×': operator.mul,
    '/': operator.truediv,
    '÷': operator.truediv,
}


def rat_arith(a, b, op):
    """Exact arithmetic between two rationals.

    :param a: First operand.
    :param b: Second operand.
    :param op: One of ``+``, ``-``, ``*``, ``/`` (the unicode signs
      ``−``, ``×`` and ``÷`` are accepted too).
    """
    try:
        fn = _OPERATIONS[op]
    except KeyError:
        raise ValueError('Unknown operation {}'.format(op))

    a, b = Fraction(a), Fraction(b)
    if fn is operator.truediv and b == 0:
        raise DivisionByZero('Division of {} by zero'.format(a))
    return fn(a, b)


def primes_up_to(limit):
    """Returns a list with the primes p <= limit."""
    return list(sieve.primerange(2, limit + 1))


def factor_integer(n, limit=FACTOR_LIMIT):
    """Factors a positive integer by trial division over a prime sieve.

    :param n: The integer, n >= 1.
    :param limit: Largest n accepted.
    """
    if n < 1:
        raise ValueError('Only positive integers can be factored')
    if n > limit:
        raise FactorizationTooLarge(
            '{} is larger than the factorization limit {}'.format(n, limit))

    factors = {}
    for p in sieve.primerange(2, isqrt(n) + 1):
        if p * p > n:
            break
        while n % p == 0:
            n //= p
            factors[p] = factors.get(p, 0) + 1

    # what is left has no factor <= its square root
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def factor_rational(q, limit=FACTOR_LIMIT):
    """Returns ``(sign, pmap)`` such that q = sign * prod(p ** e)
    for (p, e) in pmap.

    :param q: A nonzero rational.
    :param limit: Largest numerator/denominator accepted.
    """
    q = Fraction(q)
    if q == 0:
        raise ZeroFactorization('Zero has no prime factorization')

    sign = 1 if q > 0 else -1
    pmap = {p: Fraction(e)
            for p, e in factor_integer(abs(q.numerator), limit).items()}
    for p, e in factor_integer(q.denominator, limit).items():
        # num and den are coprime, so no prime is in both.
        pmap[p] = Fraction(-e)
    return sign, dict(sorted(pmap.items()))


def unfactor(sign, pmap):
    """Inverse of :func:`factor_rational`."""
    value = Fraction(sign)
    for p, e in pmap.items():
        value *= pow_rational_int(Fraction(p), int(e))
    return value


def pow_rational_int(q, n):
    """Exact q ** n for an integer n."""
    q = Fraction(q)
    n = operator.index(n)
    if q == 0 and n <= 0:
        raise ZeroToNonpositive('0 ** {} is undefined'.format(n))
    return q ** n


def is_terminating(q):
    """Informs if the rational has a finite decimal expansion."""
    den = Fraction(q).denominator
    for p in (2, 5):
        while den % p == 0:
            den //= p
    return den == 1
