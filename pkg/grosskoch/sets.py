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

__doc__ = """Number of elements of some infinite sets measured with ①.

Some values are only known up to a floor, like the number of squares
up to ①, ``floor(sqrt(①))``. Those are :class:`Floored` values: all
we know is that they are in ``(inner - 1, inner]``.
"""

from dataclasses import dataclass
import enum
from fractions import Fraction

from .exceptions import InvalidMeasure, ChainViolation
from .gross import (GrossExpr, GrossLinear, GROSSONE, Ordering, RawTerm,
                    compare, power)
from .sums import subsequence_count
from .utils import log


class SetId(enum.Enum):
    NATURALS = 'Naturals'
    NATURALS_MINUS_4 = 'NaturalsMinus4'
    EVENS = 'Evens'
    ODDS = 'Odds'
    SQUARES = 'Squares'
    INTEGERS = 'Integers'
    PAIRS = 'Pairs'
    Q_PRIME = 'QPrime'
    Q = 'Q'
    A2 = 'A2'
    A2_CLOSED = 'A2Closed'
    A10 = 'A10'
    C10 = 'C10'


class Cardinality(enum.Enum):
    COUNTABLE = 'Countable'
    CONTINUUM = 'Continuum'


@dataclass(frozen=True)
class Exact:
    value: GrossExpr

    def __post_init__(self):
        object.__setattr__(self, 'value', GrossExpr.coerce(self.value))

    @property
    def bounds(self):
        """``(low, low_closed, high, high_closed)``"""
        return self.value, True, self.value, True


@dataclass(frozen=True)
class Floored:
    """A value ``v`` known only as ``inner - 1 < v <= inner``."""

    inner: GrossExpr

    def __post_init__(self):
        inner = GrossExpr.coerce(self.inner)
        if len(inner.terms) != 1 or inner.sign <= 0:
            raise InvalidMeasure(
                'Only a single positive term can be floored, not {}'.format(
                    inner))
        object.__setattr__(self, 'inner', inner)

    @property
    def bounds(self):
        return self.inner - 1, False, self.inner, True


@dataclass(frozen=True)
class MeasureEntry:
    set_id: SetId
    description: str
    count: object
    cardinality: Cardinality


def _strictly_below(x, y):
    # is every point of x below every point of y?
    _, _, x_high, x_high_closed = x.bounds
    y_low, y_low_closed, _, _ = y.bounds
    order = compare(x_high, y_low)
    if order is Ordering.LT:
        return True
    if order is Ordering.EQ:
        return not (x_high_closed and y_low_closed)
    return False


def compare_measures(x, y):
    """Compares two measure values. When the values are intervals that
    overlap the answer is ``Ordering.UNDECIDABLE``."""
    if isinstance(x, Exact) and isinstance(y, Exact):
        return compare(x.value, y.value)

    if type(x) is type(y) and x == y:
        return Ordering.EQ
    if _strictly_below(x, y):
        return Ordering.LT
    if _strictly_below(y, x):
        return Ordering.GT
    return Ordering.UNDECIDABLE


def _g1(coeff=1, g=1):
    return GrossExpr([RawTerm(Fraction(coeff), Fraction(g))])


def _exp(coeff, base):
    return GrossExpr([RawTerm(Fraction(coeff), 0, {base: GrossLinear(1, 0)})])


_N = GROSSONE
_HALF = _g1(Fraction(1, 2))

_CATALOG = (
    (SetId.NATURALS, 'the set of natural numbers', Exact(_N),
     Cardinality.COUNTABLE),
    (SetId.NATURALS_MINUS_4, 'the set N \\ {3, 5, 10, 23}',
     Exact(subsequence_count(_N, 4)), Cardinality.COUNTABLE),
    (SetId.EVENS, 'the set of even numbers', Exact(_HALF),
     Cardinality.COUNTABLE),
    (SetId.ODDS, 'the set of odd numbers', Exact(_HALF),
     Cardinality.COUNTABLE),
    (SetId.SQUARES, 'the set of square natural numbers',
     Floored(power(_N, Fraction(1, 2))), Cardinality.COUNTABLE),
    (SetId.INTEGERS, 'the set of integer numbers', Exact(_g1(2) + 1),
     Cardinality.COUNTABLE),
    (SetId.PAIRS, 'the set of pairs of natural numbers', Exact(_g1(1, 2)),
     Cardinality.COUNTABLE),
    (SetId.Q_PRIME, 'the set of numerals -p/q, p/q', Exact(_g1(2, 2)),
     Cardinality.COUNTABLE),
    (SetId.Q, 'the set of numerals 0, -p/q, p/q', Exact(_g1(2, 2) + 1),
     Cardinality.COUNTABLE),
    (SetId.A2, 'binary numerals in [0, 1)', Exact(_exp(1, 2)),
     Cardinality.CONTINUUM),
    (SetId.A2_CLOSED, 'binary numerals in [0, 1]', Exact(_exp(1, 2) + 1),
     Cardinality.CONTINUUM),
    (SetId.A10, 'decimal numerals in [0, 1)', Exact(_exp(1, 10)),
     Cardinality.CONTINUUM),
    (SetId.C10, 'decimal numerals in [0, 2)', Exact(_exp(2, 10)),
     Cardinality.CONTINUUM),
)

CATALOG = {set_id: MeasureEntry(set_id, description, count, cardinality)
           for set_id, description, count, cardinality in _CATALOG}


def measure(set_id):
    """Returns the :class:`MeasureEntry` for a set."""
    return CATALOG[SetId(set_id)]


def catalog():
    """All the entries, in table order."""
    return list(CATALOG.values())


ORDERING_CHAIN = [
    Floored(power(_N, Fraction(1, 2))),
    Exact(_HALF),
    Exact(_N - 4),
    Exact(_N),
    Exact(_g1(2)),
    Exact(_g1(2) + 1),
    Exact(_g1(1, 2)),
    Exact(_g1(2, 2) + 1),
    Exact(_exp(1, 2)),
    Exact(_exp(1, 2) + 1),
    Exact(_exp(1, 10)),
    Exact(_exp(2, 10)),
]


def ordering_chain():
    """Returns the numbers of the set table in increasing order, making
    sure each one is smaller than the next."""
    chain = list(ORDERING_CHAIN)
    for i, (x, y) in enumerate(zip(chain, chain[1:])):
        order = compare_measures(x, y)
        if order is not Ordering.LT:
            log('Ordering chain broken at position {}: {}'.format(
                i, order.value), level='error')
            raise ChainViolation(
                'Element {} of the chain is not smaller than the next'.format(
                    i))
    log('Ordering chain OK', level='info')
    return chain


@dataclass(frozen=True)
class AlgebraCheck:
    name: str
    passed: bool


def _value(set_id):
    return measure(set_id).count.value


def set_algebra_checks():
    """Checks the relations between the measures of the table. Returns a
    list of :class:`AlgebraCheck`."""
    checks = (
        ('E + O = N',
         lambda: _value(SetId.EVENS) + _value(SetId.ODDS) ==
         _value(SetId.NATURALS)),
        ('Q = Q\' + 1',
         lambda: _value(SetId.Q) == _value(SetId.Q_PRIME) + 1),
        ('N \\ {3, 5, 10, 23} = N - 4',
         lambda: _value(SetId.NATURALS_MINUS_4) ==
         _value(SetId.NATURALS) - 4),
        ('Z = 2N + 1',
         lambda: _value(SetId.INTEGERS) == 2 * _value(SetId.NATURALS) + 1),
        ('P = N * N',
         lambda: _value(SetId.PAIRS) ==
         _value(SetId.NATURALS) * _value(SetId.NATURALS)),
        ('A2\' = A2 + 1',
         lambda: _value(SetId.A2_CLOSED) == _value(SetId.A2) + 1),
        ('C10 = 2 * A10',
         lambda: _value(SetId.C10) == 2 * _value(SetId.A10)),
    )
    return [AlgebraCheck(name, check()) for name, check in checks]
