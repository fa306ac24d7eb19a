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

__doc__ = """The grossone numeral system.

A number is a finite sum of terms ``c * ①^g * prod(p ** (a_p * ①))``
with rational ``c``, ``g`` and ``a_p``. Terms are kept sorted by
magnitude, from the largest to the smallest, so the first term of a
number decides its sign and whether it is infinite, finite or
infinitesimal.

Usage
`````

.. code-block:: python

    >>> x = (5 + GROSSONE ** Fraction(-31, 10)) / GROSSONE ** Fraction(-31, 10)
    >>> print(x)
    5*①^3.1 + 1

"""

from dataclasses import dataclass
import enum
from fractions import Fraction
import functools
from math import lcm, prod
from numbers import Rational as _RationalABC
from operator import attrgetter
from typing import NamedTuple

from sympy import integer_nthroot

from .exceptions import (DivisionByZero, ZeroToNonpositive,
                         AlgebraicIrrational, Unrepresentable,
                         ExponentDenominatorTooLarge, NonIntegerExponent,
                         InvalidOracle, InexactDivision)
from .numeric import factor_rational
from .utils import log

DEFAULT_MAX_TERMS = 8
DENOMINATOR_LIMIT = 10 ** 4


class Ordering(enum.Enum):
    LT = 'LT'
    EQ = 'EQ'
    GT = 'GT'
    # only interval comparisons (floored measures) answer this
    UNDECIDABLE = 'Undecidable'

    @classmethod
    def from_sign(cls, sign):
        if sign < 0:
            return cls.LT
        if sign > 0:
            return cls.GT
        return cls.EQ


class NumKind(enum.Enum):
    ZERO = 'Zero'
    PURE_FINITE = 'PureFinite'
    INFINITE = 'Infinite'
    INFINITESIMAL = 'Infinitesimal'


@dataclass(frozen=True)
class NumClass:
    kind: NumKind
    has_finite_part: bool = False
    has_infinitesimal_part: bool = False

    @property
    def is_pure_finite(self):
        return (self.kind is NumKind.PURE_FINITE and
                not self.has_infinitesimal_part)


def _is_rational(value):
    return isinstance(value, _RationalABC)


@dataclass(frozen=True)
class GrossLinear:
    """The linear form ``a*① + b``. Iteration counts and the exponents
    of prime bases are of this type."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'a', Fraction(self.a))
        object.__setattr__(self, 'b', Fraction(self.b))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, GrossExpr):
            return cls.from_expr(value)
        if _is_rational(value):
            return cls(0, Fraction(value))
        raise TypeError('Can\'t use {!r} as a linear form'.format(value))

    @classmethod
    def from_expr(cls, expr):
        """Reads ``a*① + b`` from an expression. Raises Unrepresentable
        if the expression has any other kind of term."""
        a = b = Fraction(0)
        for term in expr.terms:
            if term.expmap or term.g not in (0, 1):
                raise Unrepresentable(
                    '{} is not of the form a*①+b'.format(expr))
            if term.g == 1:
                a = term.coeff
            else:
                b = term.coeff
        return cls(a, b)

    @property
    def is_finite(self):
        return self.a == 0

    @property
    def is_zero(self):
        return self.a == 0 and self.b == 0

    def sign(self):
        """Sign of the value at infinity."""
        if self.a:
            return 1 if self.a > 0 else -1
        if self.b:
            return 1 if self.b > 0 else -1
        return 0

    def to_expr(self):
        return GrossExpr([RawTerm(self.a, 1), RawTerm(self.b, 0)])

    def __add__(self, other):
        try:
            other = type(self).coerce(other)
        except TypeError:
            return NotImplemented
        return type(self)(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-self.a, -self.b)

    def __sub__(self, other):
        try:
            other = type(self).coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, scalar):
        if not _is_rational(scalar):
            return NotImplemented
        return type(self)(self.a * scalar, self.b * scalar)

    __rmul__ = __mul__

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __str__(self):
        from .lang import format_linear
        return format_linear(self)


@functools.lru_cache(maxsize=4096)
def _exponential_sign(diff):
    """Sign of sum(a_p * ln p) for the ((p, a_p), ...) in ``diff``,
    decided with integers only."""
    if not diff:
        return 0
    if all(a > 0 for _, a in diff):
        return 1
    if all(a < 0 for _, a in diff):
        return -1

    denominator = lcm(*(a.denominator for _, a in diff))
    if denominator > DENOMINATOR_LIMIT:
        raise ExponentDenominatorTooLarge(
            'Common exponent denominator {} is over {}'.format(
                denominator, DENOMINATOR_LIMIT))
    num = prod(p ** int(a * denominator) for p, a in diff if a > 0)
    den = prod(p ** int(-a * denominator) for p, a in diff if a < 0)
    # never equal: unique factorization
    return 1 if num > den else -1


def _combine_expmaps(first, second, factor=1):
    exps = dict(first)
    for p, a in second:
        exps[p] = exps.get(p, 0) + factor * a
    return tuple(sorted((p, Fraction(a)) for p, a in exps.items() if a))


@functools.total_ordering
class OrderKey:
    """Magnitude order of a term: first the exponential part
    ``sum(a_p * ln p)``, then the power of ①."""

    __slots__ = ('expmap', 'g')

    def __init__(self, expmap, g):
        self.expmap = expmap
        self.g = g

    def __eq__(self, other):
        if not isinstance(other, OrderKey):
            return NotImplemented
        return self.expmap == other.expmap and self.g == other.g

    def __hash__(self):
        return hash((self.expmap, self.g))

    def __lt__(self, other):
        sign = _exponential_sign(_combine_expmaps(self.expmap,
                                                  other.expmap, -1))
        if sign:
            return sign < 0
        return self.g < other.g

    def __repr__(self):
        return 'OrderKey({!r}, {!r})'.format(self.expmap, self.g)


FINITE_ORDER = OrderKey((), Fraction(0))


class RawTerm(NamedTuple):
    """A term before normalization. ``bases`` maps positive rational
    bases to their exponents (GrossLinear or rationals)."""

    coeff: Fraction
    g: Fraction = Fraction(0)
    bases: dict = None


@dataclass(frozen=True)
class GrossTerm:
    """One normalized monomial ``coeff * ①^g * prod(p ** (a_p * ①))``.

    ``expmap`` is a sorted tuple of (prime, a_p) pairs with no zero a_p.
    """

    coeff: Fraction
    g: Fraction = Fraction(0)
    expmap: tuple = ()

    def __post_init__(self):
        coeff = Fraction(self.coeff)
        if coeff == 0:
            raise ValueError('A term can\'t have a zero coefficient')
        object.__setattr__(self, 'coeff', coeff)
        object.__setattr__(self, 'g', Fraction(self.g))
        expmap = tuple(sorted((p, Fraction(a)) for p, a in self.expmap
                              if a))
        object.__setattr__(self, 'expmap', expmap)

    @classmethod
    def make(cls, coeff, g=0, bases=None):
        """Creates a term folding the constant part of the base exponents
        into the coefficient.

        :param coeff: The rational coefficient.
        :param g: The exponent of ①.
        :param bases: Mapping of positive rational base -> exponent, the
          exponent being a GrossLinear or a rational.
        """
        coeff = Fraction(coeff)
        exps = {}
        for base, exponent in (bases or {}).items():
            exponent = GrossLinear.coerce(exponent)
            sign, pmap = factor_rational(base)
            if sign < 0:
                raise Unrepresentable(
                    'Negative base {} in an exponential'.format(base))
            for p, e in pmap.items():
                const = e * exponent.b
                if const.denominator != 1:
                    raise AlgebraicIrrational(
                        '{} ** {} is irrational'.format(p, const))
                coeff *= Fraction(p) ** int(const)
                exps[p] = exps.get(p, 0) + e * exponent.a
        return cls(coeff, g, tuple(exps.items()))

    @property
    def key(self):
        return OrderKey(self.expmap, self.g)

    @property
    def is_constant(self):
        return self.g == 0 and not self.expmap

    def scale(self, factor):
        return type(self)(self.coeff * factor, self.g, self.expmap)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        return type(self)(self.coeff * other.coeff, self.g + other.g,
                          _combine_expmaps(self.expmap, other.expmap))

    def __truediv__(self, other):
        return type(self)(self.coeff / other.coeff, self.g - other.g,
                          _combine_expmaps(self.expmap, other.expmap, -1))


def order_key(term):
    """The magnitude key of a term. Keys of distinct normalized terms
    are strictly ordered."""
    return term.key


def _to_term(raw):
    if isinstance(raw, GrossTerm):
        return raw
    raw = RawTerm(*raw)
    if raw.coeff == 0:
        return None
    return GrossTerm.make(raw.coeff, raw.g, raw.bases)


def _normalize_terms(raw):
    merged = {}
    for item in raw:
        term = _to_term(item)
        if term is None:
            continue
        exp_part = (term.g, term.expmap)
        merged[exp_part] = merged.get(exp_part, 0) + term.coeff

    terms = [GrossTerm(coeff, g, expmap)
             for (g, expmap), coeff in merged.items() if coeff]
    return tuple(sorted(terms, key=attrgetter('key'), reverse=True))


class GrossExpr:
    """A normalized finite sum of terms, the number type of grosskoch.

    Instances are immutable. The constructor normalizes whatever terms
    it gets (GrossTerm or RawTerm).
    """

    __slots__ = ('terms', '_hash')

    def __init__(self, terms=()):
        object.__setattr__(self, 'terms', _normalize_terms(terms))
        object.__setattr__(self, '_hash', None)

    def __setattr__(self, name, value):
        raise AttributeError('GrossExpr is immutable')

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, GrossLinear):
            return value.to_expr()
        if isinstance(value, GrossTerm):
            return cls([value])
        if _is_rational(value):
            return cls([RawTerm(Fraction(value))])
        raise TypeError('Can\'t use {!r} as a gross number'.format(value))

    @property
    def lead(self):
        """The dominant term. None for zero."""
        return self.terms[0] if self.terms else None

    @property
    def sign(self):
        if not self.terms:
            return 0
        return 1 if self.lead.coeff > 0 else -1

    @property
    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and
                                  self.lead.is_constant)

    @property
    def constant(self):
        """The rational value of a constant expression."""
        if not self.is_constant:
            raise Unrepresentable('{} is not a finite constant'.format(self))
        return self.lead.coeff if self.terms else Fraction(0)

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, '_hash', hash(self.terms))
        return self._hash

    def __eq__(self, other):
        try:
            other = type(self).coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def _binary(self, other, fn):
        try:
            other = type(self).coerce(other)
        except TypeError:
            return NotImplemented
        return fn(self, other)

    def __add__(self, other):
        return self._binary(other, add)

    def __radd__(self, other):
        return self._binary(other, lambda x, y: add(y, x))

    def __sub__(self, other):
        return self._binary(other, sub)

    def __rsub__(self, other):
        return self._binary(other, lambda x, y: sub(y, x))

    def __mul__(self, other):
        return self._binary(other, mul)

    def __rmul__(self, other):
        return self._binary(other, lambda x, y: mul(y, x))

    def __neg__(self):
        return neg(self)

    def __truediv__(self, other):
        return self._binary(other, exact_divide)

    def __rtruediv__(self, other):
        return self._binary(other, lambda x, y: exact_divide(y, x))

    def __divmod__(self, other):
        return self._binary(
            other, lambda x, y: gross_divmod(x, y)[:2])

    def __pow__(self, exponent):
        return power(self, exponent)

    def __rpow__(self, base):
        return power(base, self)

    def _compare(self, other):
        try:
            other = type(self).coerce(other)
        except TypeError:
            return NotImplemented
        return compare(self, other)

    def __lt__(self, other):
        r = self._compare(other)
        return r if r is NotImplemented else r is Ordering.LT

    def __le__(self, other):
        r = self._compare(other)
        return r if r is NotImplemented else r is not Ordering.GT

    def __gt__(self, other):
        r = self._compare(other)
        return r if r is NotImplemented else r is Ordering.GT

    def __ge__(self, other):
        r = self._compare(other)
        return r if r is NotImplemented else r is not Ordering.LT

    def __repr__(self):
        return 'GrossExpr({!r})'.format(list(self.terms))

    def __str__(self):
        # to avoid circular imports
        from .lang import print_canonical
        return print_canonical(self)


ZERO = GrossExpr()
ONE = GrossExpr([RawTerm(1)])
GROSSONE = GrossExpr([RawTerm(1, 1)])


@dataclass(frozen=True)
class DivResult:
    quotient: GrossExpr
    remainder: GrossExpr
    exact: bool

    def __iter__(self):
        return iter((self.quotient, self.remainder, self.exact))

    def __getitem__(self, index):
        return tuple(self)[index]


def normalize(raw):
    """Folds constant exponent parts into the coefficients, merges like
    terms, drops zeros and sorts by decreasing magnitude.

    :param raw: Iterable of GrossTerm or RawTerm.
    """
    return GrossExpr(raw)


def add(x, y):
    return GrossExpr(x.terms + y.terms)


def neg(x):
    return GrossExpr(-t for t in x.terms)


def sub(x, y):
    return add(x, neg(y))


def mul(x, y):
    return GrossExpr(tx * ty for tx in x.terms for ty in y.terms)


def scale(x, factor):
    """Multiplies by a rational."""
    factor = Fraction(factor)
    if factor == 0:
        return ZERO
    return GrossExpr(t.scale(factor) for t in x.terms)


def gross_divmod(x, y, max_terms=DEFAULT_MAX_TERMS):
    """Long division by dominant terms.

    Divides the dominant term of the remainder by the dominant term of
    ``y`` until the remainder is zero or ``max_terms`` quotient terms
    were computed. ``x == y * quotient + remainder`` always holds.

    :param x: The dividend.
    :param y: The divisor.
    :param max_terms: How many quotient terms to compute at most.
    """
    x, y = GrossExpr.coerce(x), GrossExpr.coerce(y)
    if not y:
        raise DivisionByZero('Division of {} by zero'.format(x))
    if max_terms < 1:
        raise ValueError('max_terms must be at least 1')

    quotient = []
    remainder = x
    while remainder and len(quotient) < max_terms:
        term = remainder.lead / y.lead
        quotient.append(term)
        remainder = remainder - mul(y, GrossExpr([term]))

    exact = not remainder
    if not exact:
        log('Division truncated after {} terms'.format(max_terms),
            level='debug')
    return DivResult(GrossExpr(quotient), remainder, exact)


def exact_divide(x, y, max_terms=DEFAULT_MAX_TERMS):
    """Returns x / y when the division ends within ``max_terms`` quotient
    terms, otherwise raises InexactDivision."""
    result = gross_divmod(x, y, max_terms)
    if not result.exact:
        raise InexactDivision(
            '{} / {} has no finite quotient'.format(x, y), result=result)
    return result.quotient


def _constant_power(c, n):
    sign = 1
    if c < 0:
        if not n.is_finite or n.b.denominator != 1:
            raise Unrepresentable(
                'Negative base {} needs an integer exponent'.format(c))
        sign = (-1) ** int(n.b)
        c = -c

    _, pmap = factor_rational(c)
    coeff = Fraction(sign)
    exps = []
    for p, e in pmap.items():
        const = e * n.b
        if const.denominator != 1:
            raise AlgebraicIrrational(
                '{} ** {} is irrational'.format(c, n.b))
        coeff *= Fraction(p) ** int(const)
        exps.append((p, e * n.a))
    return GrossTerm(coeff, 0, tuple(exps))


def _term_power(term, b):
    if b.denominator == 1:
        coeff = term.coeff ** int(b)
    elif term.coeff < 0:
        raise Unrepresentable(
            'Negative coefficient {} to the power {}'.format(term.coeff, b))
    else:
        coeff = _constant_power(term.coeff, GrossLinear(0, b)).coeff
    return GrossTerm(coeff, term.g * b,
                     tuple((p, a * b) for p, a in term.expmap))


def _repeated_product(x, n):
    result = ONE
    while n:
        if n & 1:
            result = mul(result, x)
        x = mul(x, x)
        n >>= 1
    return result


def power(x, n):
    """x ** n for a linear exponent ``n = a*① + b``.

    The cases are tried in order: n = 0; x = 0; x = 1; x a nonzero
    rational; n finite and x a single term; n a positive integer. Any
    other combination raises Unrepresentable.
    """
    x = GrossExpr.coerce(x)
    n = GrossLinear.coerce(n)

    if n.is_zero:
        if x:
            return ONE
        raise ZeroToNonpositive('0 ** 0 is undefined')

    if not x:
        if n.sign() > 0:
            return ZERO
        raise ZeroToNonpositive('0 ** {} is undefined'.format(n))

    if x == ONE:
        return ONE

    if x.is_constant:
        return GrossExpr([_constant_power(x.constant, n)])

    if n.is_finite:
        if len(x.terms) == 1:
            return GrossExpr([_term_power(x.lead, n.b)])
        if n.b.denominator == 1 and n.b > 0:
            return _repeated_product(x, int(n.b))

    base = '({})'.format(x) if len(x.terms) > 1 else str(x)
    raise Unrepresentable('{} ** ({}) is not representable'.format(base, n))


def compare(x, y):
    """Ordering of x and y. The sign of a number is the sign of its
    dominant term."""
    x, y = GrossExpr.coerce(x), GrossExpr.coerce(y)
    return Ordering.from_sign(sub(x, y).sign)


def classify(x):
    x = GrossExpr.coerce(x)
    if not x:
        return NumClass(NumKind.ZERO)

    keys = [t.key for t in x.terms]
    has_finite = any(k == FINITE_ORDER for k in keys)
    has_infinitesimal = any(k < FINITE_ORDER for k in keys)
    lead = keys[0]
    if lead > FINITE_ORDER:
        kind = NumKind.INFINITE
    elif lead < FINITE_ORDER:
        kind = NumKind.INFINITESIMAL
    else:
        kind = NumKind.PURE_FINITE
    return NumClass(kind, has_finite, has_infinitesimal)


def _rational_power(base, exponent):
    # exact base ** exponent, base > 0
    root = exponent.denominator
    num, num_exact = integer_nthroot(base.numerator, root)
    den, den_exact = integer_nthroot(base.denominator, root)
    if not (num_exact and den_exact):
        raise NonIntegerExponent(
            '{} ** {} is not rational'.format(base, exponent))
    return Fraction(int(num), int(den)) ** exponent.numerator


def eval_at(x, M):
    """Replaces ① by the rational ``M`` and returns the exact value.

    ``M ** g`` must be rational for every ①-power ``g`` and ``a_p * M``
    must be an integer for every prime exponent.
    """
    x = GrossExpr.coerce(x)
    M = Fraction(M)
    if M <= 0:
        raise InvalidOracle('The oracle value must be positive')

    total = Fraction(0)
    for term in x.terms:
        value = term.coeff * _rational_power(M, term.g)
        for p, a in term.expmap:
            exponent = a * M
            if exponent.denominator != 1:
                raise NonIntegerExponent(
                    '{} * {} is not an integer'.format(a, M))
            value *= Fraction(p) ** int(exponent)
        total += value
    return total
