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

__doc__ = """The textual side of grosskoch: a small expression language
for gross numbers, the canonical printer and the json encoding.

Grammar
```````

.. code-block:: text

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := '-' unary | power
    power := atom ('^' unary)?
    atom  := NUMBER | GROSSONE | '(' expr ')'

``GROSSONE`` is ``①`` or ``G1``. Numbers are decimals (``3.1``) or
fractions (``4/9``), always read as exact rationals. ``^`` is right
associative and binds tighter than the unary minus, so ``-2^2`` is -4.
"""

from dataclasses import dataclass
import enum
from fractions import Fraction
import functools
import json
from math import lcm
from operator import attrgetter
import re

from .exceptions import (GrossError, ExpressionSyntaxError,
                         UnknownIdentifier, Unrepresentable)
from .gross import (GrossExpr, GrossLinear, GrossTerm, GROSSONE, DivResult,
                    NumClass, NumKind, Ordering, DEFAULT_MAX_TERMS,
                    gross_divmod, power, classify)
from .numeric import is_terminating
from .utils import LoggerMixin

GROSSONE_SYMBOL = '①'
GROSSONE_ASCII = 'G1'
# bases larger than this are printed as products of prime powers
MAX_PRINTED_BASE = 10 ** 6


class TokenKind(enum.Enum):
    NUMBER = 'Number'
    GROSSONE = 'Grossone'
    PLUS = 'Plus'
    MINUS = 'Minus'
    STAR = 'Star'
    SLASH = 'Slash'
    CARET = 'Caret'
    LPAREN = 'LParen'
    RPAREN = 'RParen'
    IDENTIFIER = 'Identifier'
    END = 'End'


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    position: int


_TOKEN_RE = re.compile(r'''
    (?P<space>\s+)
  | (?P<fraction>[0-9]+/0*[1-9][0-9]*(?![0-9.]))
  | (?P<decimal>[0-9]+(?:\.[0-9]+)?|\.[0-9]+)
  | (?P<grossone>G1(?!\w)|①)
  | (?P<identifier>[^\W\d]\w*)
  | (?P<plus>\+)
  | (?P<minus>[-−])
  | (?P<star>[*×·])
  | (?P<slash>[/÷])
  | (?P<caret>\^)
  | (?P<lparen>\()
  | (?P<rparen>\))
''', re.VERBOSE)

_GROUP_KINDS = {
    'fraction': TokenKind.NUMBER,
    'decimal': TokenKind.NUMBER,
    'grossone': TokenKind.GROSSONE,
    'identifier': TokenKind.IDENTIFIER,
    'plus': TokenKind.PLUS,
    'minus': TokenKind.MINUS,
    'star': TokenKind.STAR,
    'slash': TokenKind.SLASH,
    'caret': TokenKind.CARET,
    'lparen': TokenKind.LPAREN,
    'rparen': TokenKind.RPAREN,
}


def _byte_offset(text, index):
    return len(text[:index].encode('utf-8'))


def tokenize(text):
    """Splits an expression into tokens. The last token is always
    ``TokenKind.END``. Positions are byte offsets into the utf-8
    encoded text."""
    tokens = []
    index = 0
    while index < len(text):
        match = _TOKEN_RE.match(text, index)
        if not match:
            raise ExpressionSyntaxError(
                'Unexpected character {!r}'.format(text[index]),
                position=_byte_offset(text, index))
        group = match.lastgroup
        if group != 'space':
            tokens.append(Token(_GROUP_KINDS[group], match.group(),
                                _byte_offset(text, index)))
        index = match.end()

    tokens.append(Token(TokenKind.END, '', _byte_offset(text, len(text))))
    return tokens


# ast

@dataclass(frozen=True)
class Literal:
    value: Fraction
    position: int = 0


@dataclass(frozen=True)
class GrossoneSymbol:
    position: int = 0


@dataclass(frozen=True)
class Neg:
    operand: object
    position: int = 0


@dataclass(frozen=True)
class BinaryOp:
    left: object
    right: object
    position: int = 0


class Add(BinaryOp):
    pass


class Sub(BinaryOp):
    pass


class Mul(BinaryOp):
    pass


class Div(BinaryOp):
    pass


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: object
    position: int = 0


class Parser:
    """Recursive descent parser for the grammar in the module docs."""

    _ADDITIVE = {TokenKind.PLUS: Add, TokenKind.MINUS: Sub}
    _MULTIPLICATIVE = {TokenKind.STAR: Mul, TokenKind.SLASH: Div}

    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def _advance(self):
        token = self.current
        self.index += 1
        return token

    def _expect(self, kind):
        token = self.current
        if token.kind is not kind:
            raise self._unexpected(token)
        return self._advance()

    def _unexpected(self, token):
        if token.kind is TokenKind.END:
            return ExpressionSyntaxError('Unexpected end of expression',
                                         position=token.position)
        return ExpressionSyntaxError(
            'Unexpected {!r}'.format(token.lexeme), position=token.position)

    def parse(self):
        try:
            node = self._expr()
        except RecursionError:
            raise ExpressionSyntaxError('Expression nested too deeply',
                                        position=0) from None
        if self.current.kind is not TokenKind.END:
            raise self._unexpected(self.current)
        return node

    def _expr(self):
        node = self._term()
        while self.current.kind in self._ADDITIVE:
            op = self._advance()
            right = self._term()
            node = self._ADDITIVE[op.kind](node, right, op.position)
        return node

    def _term(self):
        node = self._unary()
        while self.current.kind in self._MULTIPLICATIVE:
            op = self._advance()
            right = self._unary()
            node = self._MULTIPLICATIVE[op.kind](node, right, op.position)
        return node

    def _unary(self):
        if self.current.kind is TokenKind.MINUS:
            op = self._advance()
            return Neg(self._unary(), op.position)
        return self._power()

    def _power(self):
        base = self._atom()
        if self.current.kind is TokenKind.CARET:
            op = self._advance()
            return Pow(base, self._unary(), op.position)
        return base

    def _atom(self):
        token = self.current
        if token.kind is TokenKind.NUMBER:
            self._advance()
            return Literal(Fraction(token.lexeme), token.position)

        if token.kind is TokenKind.GROSSONE:
            self._advance()
            return GrossoneSymbol(token.position)

        if token.kind is TokenKind.LPAREN:
            self._advance()
            node = self._expr()
            self._expect(TokenKind.RPAREN)
            return node

        if token.kind is TokenKind.IDENTIFIER:
            raise UnknownIdentifier(
                'Unknown name {!r}. Use G1 or ① for grossone'.format(
                    token.lexeme), position=token.position)
        raise self._unexpected(token)


def parse(text):
    """Parses an expression and returns its syntax tree."""
    return Parser(text).parse()


@dataclass(frozen=True)
class Elaboration:
    """Result of an elaboration. When a division had to be truncated
    ``exact`` is False and ``error`` is a term (coefficient 1) with the
    order of magnitude of the error."""

    value: GrossExpr
    exact: bool = True
    error: GrossTerm = None


def _order(term):
    return GrossTerm(1, term.g, term.expmap)


def truncation_order(result, divisor):
    """Order of magnitude of the error of a truncated division. None when
    the division is exact."""
    if result.exact:
        return None
    return _order(result.remainder.lead / GrossExpr.coerce(divisor).lead)


def division_elaboration(result, divisor):
    """Wraps a :class:`DivResult` as an :class:`Elaboration`."""
    if result.exact:
        return Elaboration(result.quotient)
    return Elaboration(result.quotient, False,
                       truncation_order(result, divisor))


def _order_power(term, m):
    return GrossTerm(1, term.g * m, tuple((p, a * m) for p, a in term.expmap))


def _largest(*orders):
    orders = [o for o in orders if o is not None]
    if not orders:
        return None
    return max(orders, key=attrgetter('key'))


class Elaborator(LoggerMixin):
    """Evaluates syntax trees bottom-up with grossone arithmetic.

    Divisions are done with :func:`grosskoch.gross.gross_divmod`. When
    one is truncated the order of the truncation error follows the value
    through the rest of the tree.
    """

    def __init__(self, max_terms=DEFAULT_MAX_TERMS):
        if max_terms < 1:
            raise ValueError('max_terms must be at least 1')
        self.max_terms = max_terms

    def elaborate(self, node):
        method = getattr(self, '_elaborate_' + type(node).__name__.lower())
        try:
            return method(node)
        except GrossError as e:
            if e.position is None:
                e.position = node.position
            raise

    def _result(self, value, error=None):
        if error is None:
            return Elaboration(value)
        # terms not larger than the error mean nothing
        value = GrossExpr(t for t in value.terms if t.key > error.key)
        return Elaboration(value, False, error)

    def _elaborate_literal(self, node):
        return self._result(GrossExpr.coerce(node.value))

    def _elaborate_grossonesymbol(self, node):
        return self._result(GROSSONE)

    def _elaborate_neg(self, node):
        operand = self.elaborate(node.operand)
        return self._result(-operand.value, operand.error)

    def _elaborate_add(self, node):
        left, right = self._operands(node)
        return self._result(left.value + right.value,
                            _largest(left.error, right.error))

    def _elaborate_sub(self, node):
        left, right = self._operands(node)
        return self._result(left.value - right.value,
                            _largest(left.error, right.error))

    def _elaborate_mul(self, node):
        left, right = self._operands(node)
        both = None
        if left.error is not None and right.error is not None:
            both = _order(left.error * right.error)
        error = _largest(self._scaled(right.error, left.value),
                         self._scaled(left.error, right.value), both)
        return self._result(left.value * right.value, error)

    def _elaborate_div(self, node):
        left, right = self._operands(node)
        result = gross_divmod(left.value, right.value, self.max_terms)
        divisor = right.value.lead

        truncation = truncation_order(result, right.value)
        if truncation is not None:
            self.log('Division at byte {} truncated'.format(node.position),
                     level='debug')

        from_left = None
        if left.error is not None:
            from_left = _order(left.error / divisor)
        from_right = None
        if right.error is not None and left.value:
            from_right = _order(left.value.lead * right.error /
                                (divisor * divisor))
        return self._result(result.quotient,
                            _largest(truncation, from_left, from_right))

    def _elaborate_pow(self, node):
        base = self.elaborate(node.base)
        exponent = self.elaborate(node.exponent)
        if not exponent.exact:
            raise Unrepresentable('An exponent must be exact',
                                  position=node.exponent.position)
        n = GrossLinear.from_expr(exponent.value)
        value = power(base.value, n)
        if base.exact:
            return self._result(value)

        if not (n.is_finite and n.b.denominator == 1 and n.b > 0):
            raise Unrepresentable(
                'Only positive integer powers of a truncated value')
        m = int(n.b)
        if base.value:
            # (x + e) ** m = x ** m + m * x ** (m - 1) * e + ...
            error = _order_power(base.value.lead, m - 1) * base.error
        else:
            error = _order_power(base.error, m)
        return self._result(value, error)

    def _operands(self, node):
        return self.elaborate(node.left), self.elaborate(node.right)

    def _scaled(self, error, value):
        if error is None or not value:
            return None
        return _order(error * value.lead)


def elaborate(ast, max_terms=DEFAULT_MAX_TERMS):
    return Elaborator(max_terms).elaborate(ast)


def evaluate(text, max_terms=DEFAULT_MAX_TERMS):
    """Parses and elaborates ``text``. Returns an :class:`Elaboration`."""
    return elaborate(parse(text), max_terms)


# printing

def format_rational(q):
    """Integers as integers, terminating fractions as decimals and
    everything else as ``p/q``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    if not is_terminating(q):
        return '{}/{}'.format(q.numerator, q.denominator)

    places = 0
    den = q.denominator
    while den != 1:
        places += 1
        den = Fraction(10 ** places, q.denominator).denominator
    digits = str(abs(q.numerator) * 10 ** places // q.denominator)
    digits = digits.rjust(places + 1, '0')
    sign = '-' if q < 0 else ''
    return '{}{}.{}'.format(sign, digits[:-places], digits[-places:])


def _grouped(text):
    return '({})'.format(text) if '/' in text or text.startswith('-') \
        else text


def _grossone_part(g, symbol):
    if g == 0:
        return ''
    if g == 1:
        return symbol
    exponent = format_rational(g)
    if '/' in exponent:
        exponent = '({})'.format(exponent)
    return '{}^{}'.format(symbol, exponent)


def _scaled_symbol(s, symbol):
    if s == 1:
        return symbol
    if s == -1:
        return '(-{})'.format(symbol)
    return '({}*{})'.format(format_rational(s), symbol)


def _exponential_part(expmap, symbol):
    if not expmap:
        return ''
    d = lcm(*(a.denominator for _, a in expmap))
    base = Fraction(1)
    for p, a in expmap:
        base *= Fraction(p) ** int(a * d)

    if max(base.numerator, base.denominator) > MAX_PRINTED_BASE:
        return '*'.join('{}^{}'.format(p, _scaled_symbol(a, symbol))
                        for p, a in expmap)
    return '{}^{}'.format(_grouped(format_rational(base)),
                          _scaled_symbol(Fraction(1, d), symbol))


def _format_term(term, symbol, first):
    parts = [part for part in (_grossone_part(term.g, symbol),
                               _exponential_part(term.expmap, symbol))
             if part]
    coeff = abs(term.coeff) if not first else term.coeff
    sign = ''
    if coeff < 0:
        sign = '-'
        coeff = -coeff

    if coeff != 1 or not parts:
        text = format_rational(coeff)
        parts.insert(0, _grouped(text) if parts and '/' in text else text)
    return sign + '*'.join(parts)


def print_canonical(x, ascii=False):
    """Renders a gross number with its terms in decreasing order. What
    is printed parses back to the same number."""
    x = GrossExpr.coerce(x)
    if not x:
        return '0'
    symbol = GROSSONE_ASCII if ascii else GROSSONE_SYMBOL

    text = _format_term(x.terms[0], symbol, True)
    for term in x.terms[1:]:
        op = '-' if term.coeff < 0 else '+'
        text += ' {} {}'.format(op, _format_term(term, symbol, False))
    return text


def format_term(term, ascii=False):
    return print_canonical(GrossExpr([term]), ascii=ascii)


def format_elaboration(elaboration, ascii=False):
    text = print_canonical(elaboration.value, ascii=ascii)
    if elaboration.exact:
        return text
    return '{} + O({})'.format(text, format_term(elaboration.error, ascii))


def format_linear(n, ascii=False):
    return print_canonical(GrossLinear.coerce(n).to_expr(), ascii=ascii)


def format_quantity(quantity, ascii=False):
    from .koch import Unit

    text = print_canonical(quantity.value, ascii=ascii)
    if quantity.unit is Unit.COUNT:
        return text
    if len(quantity.value.terms) > 1:
        text = '({})'.format(text)
    return '{} {}'.format(text, quantity.unit.value)


def format_measure(value, ascii=False):
    from .sets import Floored

    if isinstance(value, Floored):
        inner = print_canonical(value.inner, ascii=ascii)
        return 'floor({})'.format(inner) if ascii else '⌊{}⌋'.format(inner)
    return print_canonical(value.value, ascii=ascii)


def format_class(num_class):
    parts = [num_class.kind.value]
    if num_class.kind is not NumKind.PURE_FINITE and \
       num_class.has_finite_part:
        parts.append('with finite part')
    if num_class.kind is not NumKind.INFINITESIMAL and \
       num_class.has_infinitesimal_part:
        parts.append('with infinitesimal part')
    return ', '.join(parts)


# json

@functools.singledispatch
def to_dict(obj):
    """Returns something ``json.dumps`` can encode."""
    raise TypeError('Can\'t encode {!r}'.format(obj))


@to_dict.register(Fraction)
def _(obj):
    return str(obj)


@to_dict.register(GrossTerm)
def _(obj):
    return {'coeff': str(obj.coeff), 'g': str(obj.g),
            'expmap': {str(p): str(a) for p, a in obj.expmap}}


@to_dict.register(GrossExpr)
def _(obj):
    return {'terms': [to_dict(t) for t in obj.terms],
            'class': classify(obj).kind.value}


@to_dict.register(GrossLinear)
def _(obj):
    return {'a': str(obj.a), 'b': str(obj.b)}


@to_dict.register(NumClass)
def _(obj):
    return {'kind': obj.kind.value,
            'has_finite_part': obj.has_finite_part,
            'has_infinitesimal_part': obj.has_infinitesimal_part}


@to_dict.register(DivResult)
def _(obj):
    return {'quotient': to_dict(obj.quotient),
            'remainder': to_dict(obj.remainder), 'exact': obj.exact}


@to_dict.register(Elaboration)
def _(obj):
    d = to_dict(obj.value)
    if not obj.exact:
        d['exact'] = False
        d['error'] = to_dict(obj.error)
    return d


@to_dict.register(enum.Enum)
def _(obj):
    return obj.value


@to_dict.register(list)
@to_dict.register(tuple)
def _(obj):
    return [to_dict(item) for item in obj]


@to_dict.register(dict)
def _(obj):
    return {str(k): to_dict(v) for k, v in obj.items()}


@to_dict.register(str)
@to_dict.register(bool)
@to_dict.register(int)
@to_dict.register(type(None))
def _(obj):
    return obj


def _register_domain_types():
    from .koch import (Quantity, SnowflakeReport, ComparisonReport,
                       QuantityComparison, FractalDimension, REPORT_FIELDS)
    from .sets import MeasureEntry, Exact, Floored, AlgebraCheck

    @to_dict.register(Quantity)
    def _(obj):
        return {'value': to_dict(obj.value), 'unit': obj.unit.value}

    @to_dict.register(SnowflakeReport)
    def _(obj):
        d = {'n': to_dict(obj.n), 'initiator': to_dict(obj.initiator)}
        for name in REPORT_FIELDS:
            d[name] = to_dict(getattr(obj, name))
        d['classes'] = to_dict(obj.classes)
        return d

    @to_dict.register(QuantityComparison)
    def _(obj):
        return {'difference': to_dict(obj.difference),
                'difference_class': to_dict(obj.difference_class),
                'ratio': to_dict(obj.ratio),
                'ordering': obj.ordering.value}

    @to_dict.register(ComparisonReport)
    def _(obj):
        return {'n': to_dict(obj.n), 'k': to_dict(obj.k),
                'comparisons': to_dict(obj.comparisons)}

    @to_dict.register(FractalDimension)
    def _(obj):
        return {'numerator': obj.numerator, 'denominator': obj.denominator,
                'digits': obj.digits, 'value': obj.value}

    @to_dict.register(Exact)
    def _(obj):
        return {'exact': to_dict(obj.value)}

    @to_dict.register(Floored)
    def _(obj):
        return {'floored': to_dict(obj.inner)}

    @to_dict.register(MeasureEntry)
    def _(obj):
        return {'set': obj.set_id.value, 'description': obj.description,
                'count': to_dict(obj.count),
                'cardinality': obj.cardinality.value}

    @to_dict.register(AlgebraCheck)
    def _(obj):
        return {'name': obj.name, 'passed': obj.passed}


_register_domain_types()


def dumps(data):
    return json.dumps(data, separators=(',', ':'), ensure_ascii=False)


def to_json(obj):
    """Encodes gross numbers, reports and measure entries as compact
    json. Rationals are strings like ``"1/2"``."""
    return dumps(to_dict(obj))


def from_json(text):
    """Decodes a gross number encoded by :func:`to_json`."""
    try:
        data = json.loads(text)
        terms = [GrossTerm(Fraction(t['coeff']), Fraction(t['g']),
                           tuple((int(p), Fraction(a))
                                 for p, a in t['expmap'].items()))
                 for t in data['terms']]
    except (ValueError, KeyError, TypeError, AttributeError) as e:
        raise ExpressionSyntaxError('Invalid json: {}'.format(e))
    return GrossExpr(terms)


def ordering_symbol(ordering):
    return {Ordering.LT: '<', Ordering.EQ: '=', Ordering.GT: '>',
            Ordering.UNDECIDABLE: '?'}[ordering]
