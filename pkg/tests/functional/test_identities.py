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

from fractions import Fraction as F
from unittest import TestCase

from grosskoch import koch, lang, sets
from grosskoch.gross import (GrossLinear, NumKind, Ordering, classify,
                             compare, eval_at, exact_divide, power)
from grosskoch.sums import sum_arith

N = GrossLinear(1, 0)

# lhs, rhs
IDENTITIES = [
    ('0*G1', '0'),
    ('G1*0', '0'),
    ('G1-G1', '0'),
    ('G1/G1', '1'),
    ('G1^0', '1'),
    ('1^G1', '1'),
    ('0^G1', '0'),
    ('0*G1^-1', '0'),
    ('G1^-1*0', '0'),
    ('G1^-1-G1^-1', '0'),
    ('G1^-1/G1^-1', '1'),
    ('(G1^-1)^0', '1'),
    ('G1*G1^-1', '1'),
    ('(5+G1^-3.1)/G1^-3.1', '5*G1^3.1+1'),
    ('G1*G1^-3.1', 'G1^-2.1'),
    ('(G1^3.1+4*G1)/G1', 'G1^2.1+4'),
    ('G1^3.1/G1^-3.1', 'G1^6.2'),
    ('(G1^3.1)^0', '1'),
    ('G1^3.1*G1^-1', 'G1^2.1'),
    ('G1^3.1*G1^-3.1', '1'),
]

# 1024 ** 0.1 is 2, so every exponent above has a rational value there
IDENTITY_ORACLE = 1024
KOCH_ORACLES = (60, 600)


def value(text):
    elaboration = lang.evaluate(text)
    assert elaboration.exact, text
    return elaboration.value


class GrossoneIdentitiesTest(TestCase):

    def test_identities(self):
        for lhs, rhs in IDENTITIES:
            with self.subTest(lhs=lhs):
                self.assertEqual(value(lhs), value(rhs))
                self.assertEqual(eval_at(value(lhs), IDENTITY_ORACLE),
                                 eval_at(value(rhs), IDENTITY_ORACLE))

    def test_infinitesimals_are_positive(self):
        for text in ('G1^-1', 'G1^-3.1'):
            self.assertIs(compare(value(text), 0), Ordering.GT)

    def test_canonical_form_is_stable(self):
        for lhs, _ in IDENTITIES:
            text = lang.print_canonical(value(lhs), ascii=True)
            self.assertEqual(value(text), value(lhs))

    def test_sign_agrees_with_oracle(self):
        for text in ('0.5*G1^2+0.5*G1', 'G1-4', '2*G1^2+1-2*G1^2',
                     '1-G1', 'G1^-1-G1^-2'):
            x = value(text)
            result = eval_at(x, 10 ** 6)
            self.assertEqual((result > 0) - (result < 0), x.sign, text)


class SumsTest(TestCase):

    def test_sum_of_infinitesimals(self):
        # i / ① for i up to 3*①^2
        result = value('3*G1^2 * (3*G1^2 + 1) / 2 * G1^-1')
        self.assertEqual(result, value('4.5*G1^3 + 1.5*G1'))
        e = value('G1^-1')
        self.assertEqual(sum_arith(e, e, value('3*G1^2')), result)

    def test_oracle(self):
        M = 60
        count = 3 * M ** 2
        result = value('4.5*G1^3 + 1.5*G1')
        self.assertEqual(eval_at(result, M),
                         F(sum(range(1, count + 1)), M))


class KochIdentitiesTest(TestCase):

    def _check(self, x, y):
        self.assertEqual(x, y)
        for M in KOCH_ORACLES:
            self.assertEqual(eval_at(x, M), eval_at(y, M))

    def test_sides(self):
        diff = koch.sides(N + 2).value - koch.sides(N).value
        self._check(diff, value('45*4^G1'))

    def test_side_length(self):
        diff = koch.side_length(N).value - koch.side_length(N + 2).value
        self._check(diff, value('8/9*(1/3)^G1'))

    def test_perimeter_ratios(self):
        p = koch.perimeter(N).value
        self._check(exact_divide(p, koch.perimeter(N - 1).value), F(4, 3))
        half = GrossLinear(F(1, 2), 0)
        self._check(exact_divide(p, koch.perimeter(half).value),
                    value('(4/3)^(0.5*G1)'))

    def test_added_area(self):
        diff = koch.area(N).value - koch.area(N - 1).value
        self._check(diff, value('1/3*(4/9)^(G1-1)'))

    def test_limit(self):
        deficit = koch.area_deficit(N).value
        self._check(deficit, value('3/5*(4/9)^G1'))
        self.assertIs(classify(deficit).kind, NumKind.INFINITESIMAL)
        self.assertIs(classify(koch.perimeter(N).value).kind,
                      NumKind.INFINITE)

    def test_closed_forms_against_recurrences(self):
        for i, expected in enumerate(koch.recurrence_oracle(20)):
            self.assertTrue(koch.report(i).same_values(expected), i)

    def test_half_grossone_perimeter(self):
        p = koch.report(GrossLinear(F(1, 2), 0)).perimeter.value
        self._check(p, 3 * power(F(4, 3), GrossLinear(F(1, 2), 0)))


class SetTableTest(TestCase):

    def test_chain(self):
        chain = sets.ordering_chain()
        for x, y in zip(chain, chain[1:]):
            self.assertIs(sets.compare_measures(x, y), Ordering.LT)

    def test_algebra(self):
        for check in sets.set_algebra_checks():
            self.assertTrue(check.passed, check.name)
