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

__doc__ = """Quantities of the Koch snowflake after ``n`` iterations,
finite or infinite.

The initiator is an equilateral triangle with side ``l`` and area
``a0 = (sqrt(3) / 4) * l ** 2``. Lengths are given in units of ``l`` and
areas in units of ``a0`` so every coefficient stays rational.

Usage
`````

.. code-block:: python

    >>> from grosskoch.gross import GrossLinear
    >>> n = GrossLinear(1, 0)  # ① iterations
    >>> print(perimeter(n))
    3*(4/3)^① l
"""

from dataclasses import dataclass, field
import enum
from fractions import Fraction

from mpmath import mp, mpf, log as mp_log, sqrt as mp_sqrt, nstr

from .exceptions import (UnitMismatch, InvalidIterationCount, StepLimit,
                         InvariantViolation)
from .gross import (GrossExpr, GrossLinear, ZERO, ONE, power, compare,
                    classify, gross_divmod, scale, DEFAULT_MAX_TERMS)
from .sums import sum_geometric
from .utils import log

MAX_ORACLE_STEPS = 64
LIMIT_AREA = Fraction(8, 5)


class Unit(enum.Enum):
    COUNT = 'count'
    LENGTH_L = 'l'
    AREA_L2 = 'l^2'
    AREA_A0 = 'a0'

    def __mul__(self, other):
        if not isinstance(other, Unit):
            return NotImplemented
        if self is Unit.COUNT:
            return other
        if other is Unit.COUNT:
            return self
        if self is other is Unit.LENGTH_L:
            return Unit.AREA_L2
        raise UnitMismatch('Can\'t multiply {} by {}'.format(
            self.value, other.value))

    def __truediv__(self, other):
        if not isinstance(other, Unit):
            return NotImplemented
        if self is other:
            return Unit.COUNT
        if other is Unit.COUNT:
            return self
        if self is Unit.AREA_L2 and other is Unit.LENGTH_L:
            return Unit.LENGTH_L
        raise UnitMismatch('Can\'t divide {} by {}'.format(
            self.value, other.value))


@dataclass(frozen=True)
class Quantity:
    value: GrossExpr
    unit: Unit = Unit.COUNT

    def __post_init__(self):
        object.__setattr__(self, 'value', GrossExpr.coerce(self.value))

    def _check_unit(self, other, action):
        if self.unit is not other.unit:
            raise UnitMismatch('Can\'t {} {} and {}'.format(
                action, self.unit.value, other.unit.value))

    def __add__(self, other):
        self._check_unit(other, 'add')
        return Quantity(self.value + other.value, self.unit)

    def __sub__(self, other):
        self._check_unit(other, 'subtract')
        return Quantity(self.value - other.value, self.unit)

    def __neg__(self):
        return Quantity(-self.value, self.unit)

    def __mul__(self, other):
        if isinstance(other, Quantity):
            return Quantity(self.value * other.value, self.unit * other.unit)
        return Quantity(self.value * other, self.unit)

    __rmul__ = __mul__

    def divide(self, other, max_terms=DEFAULT_MAX_TERMS):
        """Divides by another quantity. Returns ``(unit, DivResult)``."""
        unit = self.unit / other.unit
        return unit, gross_divmod(self.value, other.value, max_terms)

    def compare(self, other):
        self._check_unit(other, 'compare')
        return compare(self.value, other.value)

    @property
    def num_class(self):
        return classify(self.value)

    def __str__(self):
        # to avoid circular imports
        from .lang import format_quantity
        return format_quantity(self)


REPORT_FIELDS = ('sides', 'side_length', 'perimeter', 'area',
                 'added_triangles', 'added_area')


@dataclass(frozen=True)
class SnowflakeReport:
    n: GrossLinear
    sides: Quantity
    side_length: Quantity
    perimeter: Quantity
    area: Quantity
    added_triangles: Quantity
    added_area: Quantity
    initiator: GrossLinear = field(default=GrossLinear(0, 0))

    @property
    def classes(self):
        return {name: getattr(self, name).num_class for name in REPORT_FIELDS}

    def same_values(self, other):
        return all(getattr(self, name) == getattr(other, name)
                   for name in REPORT_FIELDS)


COMPARED_FIELDS = ('sides', 'side_length', 'perimeter', 'area')


@dataclass(frozen=True)
class QuantityComparison:
    """``difference`` is first minus second and ``ratio`` is first
    divided by second."""

    name: str
    first: Quantity
    second: Quantity
    difference: Quantity
    ratio: object
    ordering: object

    @property
    def difference_class(self):
        return self.difference.num_class


@dataclass(frozen=True)
class ComparisonReport:
    n: GrossLinear
    k: GrossLinear
    comparisons: dict

    def __getitem__(self, name):
        return self.comparisons[name]


@dataclass(frozen=True)
class FractalDimension:
    numerator: int
    denominator: int
    digits: int
    value: str

    def __str__(self):
        return 'log{}/log{} ≈ {}'.format(self.numerator, self.denominator,
                                         self.value)


def _is_finite_below(n, bound):
    return n.is_finite and n.b < bound


def sides(n):
    """N_n = 3 * 4 ** n"""
    return Quantity(scale(power(4, GrossLinear.coerce(n)), 3), Unit.COUNT)


def side_length(n):
    """L_n = l / 3 ** n"""
    return Quantity(power(Fraction(1, 3), GrossLinear.coerce(n)),
                    Unit.LENGTH_L)


def perimeter(n):
    """P_n = N_n * L_n = 3 * (4/3) ** n"""
    n = GrossLinear.coerce(n)
    return Quantity(scale(power(Fraction(4, 3), n), 3), Unit.LENGTH_L)


def added_triangles(n):
    """T_n = N_(n-1) = 3 * 4 ** (n - 1), the triangles added at the
    n-th iteration."""
    n = GrossLinear.coerce(n)
    if _is_finite_below(n, 1):
        raise InvalidIterationCount(
            'Triangles are added from the first iteration on, not {}'.format(
                n))
    return Quantity(scale(power(4, n - 1), 3), Unit.COUNT)


def triangle_area(n):
    """a_n = a0 / 9 ** n, the area of each triangle added at the
    n-th iteration."""
    return Quantity(power(Fraction(1, 9), GrossLinear.coerce(n)),
                    Unit.AREA_A0)


def added_area(n):
    """T_n * a_n = (1/3) * (4/9) ** (n - 1)"""
    n = GrossLinear.coerce(n)
    if _is_finite_below(n, 1):
        raise InvalidIterationCount(
            'Area is added from the first iteration on, not {}'.format(n))
    return added_triangles(n) * triangle_area(n)


def area(n):
    """A_n = a0 + sum of the added areas = (a0 / 5) * (8 - 3 * (4/9) ** n)
    """
    n = GrossLinear.coerce(n)
    added = scale(sum_geometric(Fraction(4, 9), n), Fraction(1, 3))
    return Quantity(ONE + added, Unit.AREA_A0)


def limit_area():
    """Area of the snowflake at the limit of the traditional analysis."""
    return Quantity(LIMIT_AREA, Unit.AREA_A0)


def area_deficit(n):
    """How much the area after ``n`` iterations lacks to reach the limit
    area. Always a positive infinitesimal for infinite ``n``."""
    return limit_area() - area(n)


def report(n, initiator=0):
    """All the quantities of the snowflake.

    :param n: Iterations done.
    :param initiator: Iterations done to build the initiator the ``n``
      iterations start from. The snowflake reported has
      ``n + initiator`` iterations.
    """
    initiator = GrossLinear.coerce(initiator)
    total = GrossLinear.coerce(n) + initiator
    if _is_finite_below(total, 0):
        raise InvalidIterationCount(
            'Can\'t iterate {} times'.format(total))

    log('Building snowflake report for n = {}'.format(total), level='debug')
    if total.is_zero:
        triangles = Quantity(ZERO, Unit.COUNT)
        new_area = Quantity(ZERO, Unit.AREA_A0)
    else:
        triangles = added_triangles(total)
        new_area = added_area(total)

    snowflake = SnowflakeReport(
        n=total, sides=sides(total), side_length=side_length(total),
        perimeter=perimeter(total), area=area(total),
        added_triangles=triangles, added_area=new_area,
        initiator=initiator)
    _check_report(snowflake)
    return snowflake


def _check_report(snowflake):
    if snowflake.sides * snowflake.side_length != snowflake.perimeter:
        raise InvariantViolation(
            'P != N * L for n = {}'.format(snowflake.n))

    if snowflake.n.is_zero:
        return

    previous = area(snowflake.n - 1)
    if previous + snowflake.added_area != snowflake.area:
        raise InvariantViolation(
            'A_n != A_(n-1) + T_n * a_n for n = {}'.format(snowflake.n))


def compare_snowflakes(n, k, max_terms=DEFAULT_MAX_TERMS):
    """Compares the snowflake with ``n`` iterations to the one with
    ``k`` iterations.

    Differences are ``Q(n) - Q(k)`` and ratios are ``Q(n) / Q(k)``,
    truncated after ``max_terms`` quotient terms when they don't end.
    """
    first, second = report(n), report(k)
    comparisons = {}
    for name in COMPARED_FIELDS:
        q1, q2 = getattr(first, name), getattr(second, name)
        _, ratio = q1.divide(q2, max_terms)
        comparisons[name] = QuantityComparison(
            name=name, first=q1, second=q2, difference=q1 - q2, ratio=ratio,
            ordering=q1.compare(q2))

    return ComparisonReport(first.n, second.n, comparisons)


def compare_initiators(steps, offset, max_terms=DEFAULT_MAX_TERMS):
    """Compares ``steps`` iterations from the triangle with ``steps``
    iterations from the initiator obtained after ``offset``
    iterations."""
    steps = GrossLinear.coerce(steps)
    return compare_snowflakes(steps, steps + offset, max_terms)


def recurrence_oracle(steps):
    """Iterates the recurrences of the snowflake with plain rationals.

    Returns the reports for 0, 1, ..., ``steps`` iterations.
    """
    if not 0 <= steps <= MAX_ORACLE_STEPS:
        raise StepLimit('steps must be between 0 and {}'.format(
            MAX_ORACLE_STEPS))

    count, length, total_area = Fraction(3), Fraction(1), Fraction(1)
    triangles, new_area = Fraction(0), Fraction(0)
    reports = []
    for i in range(steps + 1):
        if i:
            triangles = count
            new_area = triangles / Fraction(9) ** i
            count *= 4
            length /= 3
            total_area += new_area

        reports.append(SnowflakeReport(
            n=GrossLinear(0, i),
            sides=Quantity(count, Unit.COUNT),
            side_length=Quantity(length, Unit.LENGTH_L),
            perimeter=Quantity(count * length, Unit.LENGTH_L),
            area=Quantity(total_area, Unit.AREA_A0),
            added_triangles=Quantity(triangles, Unit.COUNT),
            added_area=Quantity(new_area, Unit.AREA_A0)))
    return reports


def fractal_dimension(digits=5):
    """The fractal dimension of the curve, log 4 / log 3, rendered with
    ``digits`` decimal places. For display only."""
    if digits < 1:
        raise ValueError('digits must be at least 1')
    with mp.workdps(digits + 10):
        value = mp_log(4) / mp_log(3)
        # one integer digit
        text = nstr(value, digits + 1, strip_zeros=False)
    return FractalDimension(4, 3, digits, text)


def to_l2(quantity, digits=5):
    """Decimal value of a finite area given in a0 units, in l^2 units.
    For display only."""
    if quantity.unit is not Unit.AREA_A0:
        raise UnitMismatch('Only areas in a0 can be converted to l^2')
    value = quantity.value.constant
    with mp.workdps(digits + 10):
        l2 = mpf(value.numerator) / value.denominator * mp_sqrt(3) / 4
        return nstr(l2, digits)
