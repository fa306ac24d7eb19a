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

from dataclasses import dataclass, field
import enum
from fractions import Fraction

from .exceptions import (SequentialLimitExceeded, NonpositiveCount,
                         UnitRatio, NegativeCount)
from .gross import (GrossExpr, GrossLinear, GROSSONE, ONE, ZERO, power,
                    scale)


class SeriesKind(enum.Enum):
    ARITHMETIC = 'arith'
    GEOMETRIC = 'geom'


def sum_arith(first, step, count, sequential=False):
    """Sum of ``count`` terms of the arithmetic progression that starts
    at ``first`` and grows by ``step``.

    :param first: The first addend.
    :param step: Difference between consecutive addends.
    :param count: How many addends. Must be >= 1.
    :param sequential: If True the sum is thought of as done one addend
      at a time, so it can't have more than ① addends.
    """
    first = GrossExpr.coerce(first)
    step = GrossExpr.coerce(step)
    count = GrossExpr.coerce(count)

    if count < 1:
        raise NonpositiveCount(
            'A sum needs at least one addend, got {}'.format(count))
    if sequential and count > GROSSONE:
        raise SequentialLimitExceeded(
            'A sequential process can\'t have {} steps'.format(count))

    return count * first + scale(step * count * (count - 1),
                                 Fraction(1, 2))


def sum_geometric(ratio, n):
    """``1 + ratio + ... + ratio ** (n - 1)``, that is
    ``(1 - ratio ** n) / (1 - ratio)``.

    :param ratio: A rational other than 1.
    :param n: How many addends, a linear form in ①.
    """
    ratio = Fraction(ratio)
    if ratio == 1:
        raise UnitRatio('The ratio of a geometric sum can\'t be 1')

    n = GrossLinear.coerce(n)
    if n.is_zero:
        return ZERO
    return scale(ONE - power(ratio, n), 1 / (1 - ratio))


def subsequence_count(original, excluded):
    """Number of elements left after removing ``excluded`` elements
    from a sequence with ``original`` elements."""
    original = GrossExpr.coerce(original)
    excluded = GrossExpr.coerce(excluded)
    if excluded < 0 or excluded > original:
        raise NegativeCount(
            'Can\'t remove {} elements from {}'.format(excluded, original))
    return original - excluded


def sequence_length(first, last):
    """Number of elements of the consecutive integers
    ``first, first + 1, ..., last``."""
    length = GrossExpr.coerce(last) - GrossExpr.coerce(first) + 1
    if length < 0:
        raise NegativeCount('{} comes after {}'.format(first, last))
    return length


@dataclass(frozen=True)
class SumSpec:
    """A sum with an explicit number of addends.

    For arithmetic sums ``params`` is ``(first, step)`` and for geometric
    ones it is ``(ratio,)``.
    """

    kind: SeriesKind
    params: tuple
    count: object
    sequential: bool = field(default=False)

    def __post_init__(self):
        kind = SeriesKind(self.kind)
        object.__setattr__(self, 'kind', kind)
        if kind is SeriesKind.ARITHMETIC:
            if len(self.params) != 2:
                raise ValueError('Arithmetic sums need first and step')
            return

        if len(self.params) != 1:
            raise ValueError('Geometric sums need only the ratio')
        if Fraction(self.params[0]) == 1:
            raise UnitRatio('The ratio of a geometric sum can\'t be 1')
        # bound must be linear
        object.__setattr__(self, 'count', GrossLinear.coerce(self.count))

    def evaluate(self):
        if self.kind is SeriesKind.ARITHMETIC:
            first, step = self.params
            return sum_arith(first, step, self.count,
                             sequential=self.sequential)

        if self.sequential and self.count > GrossLinear(1, 0):
            raise SequentialLimitExceeded(
                'A sequential process can\'t have {} steps'.format(
                    self.count))
        return sum_geometric(self.params[0], self.count)
