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

from decimal import Decimal, localcontext
from fractions import Fraction as F
from unittest import TestCase, mock

from grosskoch import koch
from grosskoch.exceptions import (UnitMismatch, InvalidIterationCount,
                                  StepLimit, InvariantViolation)
from grosskoch.gross import (GrossLinear, GROSSONE as G, NumKind, Ordering,
                             classify, exact_divide, power)
from grosskoch.koch import Quantity, Unit

N = GrossLinear(1, 0)
HALF_N = GrossLinear(F(1, 2), 0)


class UnitTest(TestCase):

    def test_count_is_neutral(self):
        self.assertIs(Unit.COUNT * Unit.LENGTH_L, Unit.LENGTH_L)
        self.assertIs(Unit.AREA_A0 * Unit.COUNT, Unit.AREA_A0)

    def test_length_squared(self):
        self.assertIs(Unit.LENGTH_L * Unit.LENGTH_L, Unit.AREA_L2)

    def test_same_unit_ratio(self):
        self.assertIs(Unit.LENGTH_L / Unit.LENGTH_L, Unit.COUNT)

    def test_mismatch(self):
        with self.assertRaises(UnitMismatch):
            Unit.AREA_A0 * Unit.LENGTH_L
        with self.assertRaises(UnitMismatch):
            Unit.COUNT / Unit.LENGTH_L


class QuantityTest(TestCase):

    def test_add_mismatch(self):
        with self.assertRaises(UnitMismatch):
            koch.sides(1) + koch.side_length(1)

    def test_areas_in_different_units(self):
        with self.assertRaises(UnitMismatch):
            Quantity(1, Unit.AREA_A0) + Quantity(1, Unit.AREA_L2)

    def test_compare_mismatch(self):
        with self.assertRaises(UnitMismatch):
            koch.perimeter(N).compare(koch.sides(N))

    def test_divide(self):
        unit, result = koch.perimeter(N).divide(koch.side_length(N))
        self.assertIs(unit, Unit.COUNT)
        self.assertEqual(result.quotient, koch.sides(N).value)

    def test_str(self):
        self.assertEqual(str(koch.perimeter(N)), '3*(4/3)^① l')
        self.assertEqual(str(koch.sides(N)), '3*4^①')
        self.assertEqual(str(koch.area(N)), '(1.6 - 0.6*(4/9)^①) a0')


class QuantitiesTest(TestCase):

    def test_sides(self):
        self.assertEqual(koch.sides(N).value, 3 * power(4, G))
        self.assertEqual(koch.sides(0).value, 3)
        self.assertEqual(koch.sides(3).value, 192)

    def test_more_sides(self):
        diff = koch.sides(N + 2) - koch.sides(N)
        self.assertEqual(diff.value, 45 * power(4, G))

    def test_side_length(self):
        self.assertEqual(koch.side_length(N).value, power(F(1, 3), G))
        diff = koch.side_length(N) - koch.side_length(N + 2)
        self.assertEqual(diff.value, F(8, 9) * power(F(1, 3), G))

    def test_perimeter(self):
        p = koch.perimeter(N)
        self.assertEqual(p.value, 3 * power(F(4, 3), G))
        self.assertIs(p.num_class.kind, NumKind.INFINITE)

    def test_perimeter_is_sides_times_length(self):
        for n in (0, 5, N, HALF_N, N - 3, 2 * N + 1):
            self.assertEqual(koch.sides(n) * koch.side_length(n),
                             koch.perimeter(n))

    def test_perimeter_ratio(self):
        for n in (0, 5, N, HALF_N, N - 3, 2 * N + 1):
            ratio = exact_divide(koch.perimeter(n + 1).value,
                                 koch.perimeter(n).value)
            self.assertEqual(ratio, F(4, 3))

    def test_perimeter_half_grossone(self):
        ratio = exact_divide(koch.perimeter(N).value,
                             koch.perimeter(HALF_N).value)
        self.assertEqual(ratio, power(F(4, 3), GrossLinear(F(1, 2), 0)))

    def test_perimeter_growth(self):
        diff = koch.perimeter(N) - koch.perimeter(N - 1)
        self.assertEqual(diff.value, power(F(4, 3), N - 1))

    def test_added_triangles(self):
        self.assertEqual(koch.added_triangles(1).value, 3)
        self.assertEqual(koch.added_triangles(N).value, 3 * power(4, N - 1))

    def test_added_triangles_before_first_iteration(self):
        with self.assertRaises(InvalidIterationCount):
            koch.added_triangles(0)

    def test_added_area(self):
        self.assertEqual(koch.added_area(1).value, F(1, 3))
        added = koch.added_area(N)
        self.assertEqual(added.value, F(1, 3) * power(F(4, 9), N - 1))
        self.assertIs(added.unit, Unit.AREA_A0)
        self.assertIs(added.num_class.kind, NumKind.INFINITESIMAL)

    def test_added_area_before_first_iteration(self):
        with self.assertRaises(InvalidIterationCount):
            koch.added_area(0)

    def test_area(self):
        self.assertEqual(koch.area(0).value, 1)
        self.assertEqual(koch.area(3).value, F(376, 243))

    def test_area_grows_by_added_area(self):
        diff = koch.area(N) - koch.area(N - 1)
        self.assertEqual(diff, koch.added_area(N))
        self.assertTrue(diff.value > 0)

    def test_area_deficit(self):
        deficit = koch.area_deficit(N)
        self.assertEqual(deficit.value, F(3, 5) * power(F(4, 9), G))
        self.assertIs(deficit.num_class.kind, NumKind.INFINITESIMAL)
        self.assertTrue(deficit.value > 0)

    def test_area_class(self):
        num_class = koch.area(N).num_class
        self.assertIs(num_class.kind, NumKind.PURE_FINITE)
        self.assertTrue(num_class.has_infinitesimal_part)


class ReportTest(TestCase):

    def test_finite(self):
        report = koch.report(3)
        self.assertEqual(report.sides.value, 192)
        self.assertEqual(report.side_length.value, F(1, 27))
        self.assertEqual(report.perimeter.value, F(64, 9))
        self.assertEqual(report.area.value, F(376, 243))
        self.assertEqual(report.added_triangles.value, 48)
        self.assertEqual(report.added_area.value, F(16, 243))

    def test_zero_iterations(self):
        report = koch.report(0)
        self.assertEqual(report.added_triangles.value, 0)
        self.assertEqual(report.added_area.value, 0)
        self.assertEqual(report.area.value, 1)

    def test_half_grossone(self):
        report = koch.report(HALF_N)
        self.assertEqual(report.perimeter.value,
                         3 * power(F(4, 3), GrossLinear(F(1, 2), 0)))

    def test_initiator(self):
        report = koch.report(1, initiator=2)
        self.assertEqual(report.n, GrossLinear(0, 3))
        self.assertEqual(report.initiator, GrossLinear(0, 2))
        self.assertTrue(report.same_values(koch.report(3)))

    def test_negative(self):
        with self.assertRaises(InvalidIterationCount):
            koch.report(-1)

    def test_classes(self):
        classes = koch.report(N).classes
        self.assertIs(classes['sides'].kind, NumKind.INFINITE)
        self.assertIs(classes['side_length'].kind, NumKind.INFINITESIMAL)
        self.assertIs(classes['area'].kind, NumKind.PURE_FINITE)

    @mock.patch.object(koch, 'perimeter', mock.Mock(
        return_value=Quantity(1, Unit.LENGTH_L)))
    def test_broken_perimeter(self):
        with self.assertRaises(InvariantViolation):
            koch.report(N)

    @mock.patch.object(koch, 'added_area', mock.Mock(
        return_value=Quantity(0, Unit.AREA_A0)))
    def test_broken_area(self):
        with self.assertRaises(InvariantViolation):
            koch.report(N)


class CompareTest(TestCase):

    def test_two_more_iterations(self):
        comparison = koch.compare_snowflakes(N, N + 2)
        self.assertEqual(comparison['sides'].difference.value,
                         -45 * power(4, G))
        self.assertEqual(comparison['side_length'].difference.value,
                         F(8, 9) * power(F(1, 3), G))
        self.assertEqual(comparison['sides'].ratio.quotient, F(1, 16))
        self.assertIs(comparison['sides'].ordering, Ordering.LT)
        self.assertIs(comparison['side_length'].ordering, Ordering.GT)
        self.assertIs(comparison['perimeter'].ordering, Ordering.LT)
        self.assertIs(comparison['area'].ordering, Ordering.LT)

    def test_area_ratio_is_truncated(self):
        comparison = koch.compare_snowflakes(N, N + 2, max_terms=3)
        ratio = comparison['area'].ratio
        self.assertFalse(ratio.exact)
        self.assertEqual(len(ratio.quotient.terms), 3)

    def test_same(self):
        comparison = koch.compare_snowflakes(N, N)
        for name in koch.COMPARED_FIELDS:
            self.assertEqual(comparison[name].difference.value, 0)
            self.assertEqual(comparison[name].ratio.quotient, 1)
            self.assertIs(comparison[name].ordering, Ordering.EQ)

    def test_one_less(self):
        comparison = koch.compare_snowflakes(N, N - 1)
        self.assertIs(comparison['sides'].ordering, Ordering.GT)
        self.assertIs(comparison['side_length'].ordering, Ordering.LT)
        self.assertIs(comparison['perimeter'].ordering, Ordering.GT)
        self.assertIs(comparison['area'].ordering, Ordering.GT)
        self.assertIs(comparison['area'].difference_class.kind,
                      NumKind.INFINITESIMAL)
        self.assertIs(comparison['perimeter'].difference_class.kind,
                      NumKind.INFINITE)

    def test_half(self):
        comparison = koch.compare_snowflakes(N, HALF_N)
        self.assertEqual(comparison['perimeter'].ratio.quotient,
                         power(F(4, 3), GrossLinear(F(1, 2), 0)))

    def test_initiators(self):
        comparison = koch.compare_initiators(N, 2)
        self.assertEqual(comparison.n, N)
        self.assertEqual(comparison.k, N + 2)


class OracleTest(TestCase):

    def test_first_iteration(self):
        first = koch.recurrence_oracle(1)[1]
        self.assertEqual(first.sides.value, 12)
        self.assertEqual(first.side_length.value, F(1, 3))
        self.assertEqual(first.perimeter.value, 4)
        self.assertEqual(first.area.value, F(4, 3))

    def test_zero_steps(self):
        self.assertEqual(len(koch.recurrence_oracle(0)), 1)

    def test_closed_forms(self):
        for i, expected in enumerate(koch.recurrence_oracle(20)):
            self.assertTrue(koch.report(i).same_values(expected), i)

    def test_step_limit(self):
        with self.assertRaises(StepLimit):
            koch.recurrence_oracle(65)
        with self.assertRaises(StepLimit):
            koch.recurrence_oracle(-1)


class DisplayTest(TestCase):

    def test_fractal_dimension(self):
        self.assertEqual(str(koch.fractal_dimension()),
                         'log4/log3 ≈ 1.26186')

    def test_fractal_dimension_digits(self):
        self.assertEqual(koch.fractal_dimension(2).value, '1.26')

    def test_fractal_dimension_against_decimal(self):
        with localcontext() as ctx:
            ctx.prec = 40
            expected = Decimal(4).ln() / Decimal(3).ln()
        self.assertEqual(koch.fractal_dimension(10).value,
                         str(expected.quantize(Decimal('1e-10'))))

    def test_fractal_dimension_digits_positive(self):
        with self.assertRaises(ValueError):
            koch.fractal_dimension(0)

    def test_to_l2(self):
        self.assertEqual(koch.to_l2(Quantity(1, Unit.AREA_A0)), '0.43301')

    def test_to_l2_wrong_unit(self):
        with self.assertRaises(UnitMismatch):
            koch.to_l2(koch.side_length(1))

    def test_limit_area(self):
        self.assertEqual(koch.limit_area().value, F(8, 5))
        self.assertIs(classify(koch.limit_area().value).kind,
                      NumKind.PURE_FINITE)
