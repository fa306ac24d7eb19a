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
# GNU General Public License for more details.

# You should have received a copy of the GNU Affero General Public License
# along with grosskoch. If not, see <http://www.gnu.org/licenses/>.

# pylint: disable-all

from dataclasses import dataclass
import functools
import os
import sys

from mando import command, arg, main

from grosskoch import ENVVAR, create_settings
from grosskoch.exceptions import (GrossError, InternalInvariantError,
                                  BadConfig, Unrepresentable)
from grosskoch.gross import GrossLinear, eval_at, DEFAULT_MAX_TERMS
from grosskoch import koch as snowflake
from grosskoch import lang
from grosskoch import sets as catalog
from grosskoch.sums import SumSpec, SeriesKind
from grosskoch.utils import log, set_loglevel

FORMAT_ENVVAR = 'GROSSKOCH_FORMAT'
FORMATS = ('text', 'json')

LABELS = {
    'sides': 'N',
    'side_length': 'L',
    'perimeter': 'P',
    'area': 'A',
    'added_triangles': 'T',
    'added_area': 'T*a',
}


@dataclass(frozen=True)
class CliConfig:
    format: str = 'text'
    max_terms: int = DEFAULT_MAX_TERMS
    ascii: bool = False
    oracle_m: int = None
    digits: int = 5
    loglevel: str = 'warning'

    def __post_init__(self):
        if self.format not in FORMATS:
            raise BadConfig('Unknown format {}. Use text or json'.format(
                self.format))
        if self.max_terms < 1:
            raise BadConfig('--max-terms must be at least 1')
        if self.digits < 1:
            raise BadConfig('--digits must be at least 1')
        if self.oracle_m is not None and self.oracle_m <= 0:
            raise BadConfig('The oracle value must be positive')

    @classmethod
    def create(cls, format=None, max_terms=None, ascii=False, oracle=None,
               digits=None, loglevel=None, conffile=None):
        """Creates the config for a command. Values given in the command
        line win over the environment that wins over the settings file.
        """
        if conffile:
            os.environ[ENVVAR] = conffile

        create_settings()

        from grosskoch import settings

        def _get(value, key, default):
            if value is not None:
                return value
            return getattr(settings, key, default)

        format = format or os.environ.get(FORMAT_ENVVAR)
        return cls(format=_get(format, 'FORMAT', 'text'),
                   max_terms=_get(max_terms, 'MAX_TERMS', DEFAULT_MAX_TERMS),
                   ascii=ascii or getattr(settings, 'ASCII', False),
                   oracle_m=_get(oracle, 'ORACLE_M', None),
                   digits=_get(digits, 'DIGITS', 5),
                   loglevel=_get(loglevel, 'LOGLEVEL', 'warning'))


def cli_command(func):
    """Turns grosskoch errors into messages and exit codes: 1 for
    errors in the input and 2 when an internal check fails."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except InternalInvariantError as e:
            log(str(e), level='error')
            print('Internal error: {}'.format(e), file=sys.stderr)
            sys.exit(2)
        except GrossError as e:
            print('Error: {}'.format(e), file=sys.stderr)
            sys.exit(1)

    return wrapper


def _setup(**options):
    config = CliConfig.create(**options)
    set_loglevel(config.loglevel)
    return config


def _linear(text, config):
    elaboration = lang.evaluate(text, config.max_terms)
    if not elaboration.exact:
        raise Unrepresentable('{} is not an exact iteration count'.format(
            text))
    return GrossLinear.from_expr(elaboration.value)


def _exact_value(text, config):
    elaboration = lang.evaluate(text, config.max_terms)
    if not elaboration.exact:
        raise Unrepresentable('{} has no exact value'.format(text))
    return elaboration.value


@command('eval')
@cli_command
def eval_(expression, oracle=None, format=None, max_terms=None, ascii=False,
          loglevel=None, conffile=None):
    """Evaluates an expression with grossone.

    Use G1 or ① for grossone. Divisions that don't end are truncated
    and printed with a trailing ``+ O(...)``.

    :param expression: The expression, like ``(5+G1^-3.1)/G1^-3.1``.
    :param --oracle <int>: Also evaluates the result with grossone
      replaced by this value and checks the signs agree.
    :param -f, --format: Output format, text or json.
    :param --max-terms <int>: Quotient terms before a division is
      truncated. Defaults to 8.
    :param --ascii: Prints G1 instead of ①.
    :param --loglevel: Level for logging messages. Defaults to `warning`.
    :param -c, --conffile: Path to a config file.
    """
    config = _setup(format=format, max_terms=max_terms, ascii=ascii,
                    oracle=oracle, loglevel=loglevel, conffile=conffile)
    log('eval {!r}'.format(expression), level='debug')
    elaboration = lang.evaluate(expression, config.max_terms)

    check = None
    if config.oracle_m is not None:
        value = eval_at(elaboration.value, config.oracle_m)
        sign = (value > 0) - (value < 0)
        check = (value, sign == elaboration.value.sign)

    if config.format == 'json':
        data = lang.to_dict(elaboration)
        if check:
            data['oracle'] = {'M': str(config.oracle_m),
                              'value': str(check[0]),
                              'sign_agrees': check[1]}
        print(lang.dumps(data))
        return

    print(lang.format_elaboration(elaboration, ascii=config.ascii))
    if check:
        print('oracle({})={} {}'.format(config.oracle_m, check[0],
                                        'OK' if check[1] else 'MISMATCH'))


def _print_report(report, config):
    if config.format == 'json':
        data = lang.to_dict(report)
        data['fractal_dimension'] = lang.to_dict(
            snowflake.fractal_dimension(config.digits))
        print(lang.dumps(data))
        return

    print('n = {}'.format(lang.format_linear(report.n, ascii=config.ascii)))
    for name, label in LABELS.items():
        quantity = getattr(report, name)
        line = '{} = {}  [{}]'.format(
            label, lang.format_quantity(quantity, ascii=config.ascii),
            lang.format_class(quantity.num_class))
        if name == 'area' and quantity.value.is_constant:
            line += '  ≈ {} l^2'.format(
                snowflake.to_l2(quantity, config.digits))
        print(line)
    print('dimension = {}'.format(snowflake.fractal_dimension(config.digits)))


def _print_comparison(comparison, config):
    if config.format == 'json':
        print(lang.to_json(comparison))
        return

    fmt = functools.partial(lang.format_linear, ascii=config.ascii)
    print('n = {}'.format(fmt(comparison.n)))
    print('k = {}'.format(fmt(comparison.k)))
    for name in snowflake.COMPARED_FIELDS:
        label = LABELS[name]
        item = comparison[name]
        ratio = lang.division_elaboration(item.ratio, item.second.value)
        print('{0}_n - {0}_k = {1}  [{2}]'.format(
            label, lang.format_quantity(item.difference, ascii=config.ascii),
            lang.format_class(item.difference_class)))
        print('{0}_n / {0}_k = {1}'.format(
            label, lang.format_elaboration(ratio, ascii=config.ascii)))
        print('{0}_n {1} {0}_k'.format(
            label, lang.ordering_symbol(item.ordering)))


def _compare(n, k, config):
    comparison = snowflake.compare_snowflakes(
        _linear(n, config), _linear(k, config), config.max_terms)
    _print_comparison(comparison, config)


@command
@arg('k', nargs='?', default=None)
@cli_command
def koch(n, k, format=None, max_terms=None, ascii=False, digits=None,
         loglevel=None, conffile=None):
    """Shows the Koch snowflake after n iterations.

    With two iteration counts compares the two snowflakes.

    :param n: Number of iterations, like ``G1`` or ``0.5*G1``.
    :param k: Iterations of a second snowflake to compare with.
    :param -f, --format: Output format, text or json.
    :param --max-terms <int>: Quotient terms before a ratio is truncated.
    :param --ascii: Prints G1 instead of ①.
    :param --digits <int>: Decimal places for the fractal dimension.
    :param --loglevel: Level for logging messages. Defaults to `warning`.
    :param -c, --conffile: Path to a config file.
    """
    config = _setup(format=format, max_terms=max_terms, ascii=ascii,
                    digits=digits, loglevel=loglevel, conffile=conffile)
    if k is not None:
        _compare(n, k, config)
        return

    _print_report(snowflake.report(_linear(n, config)), config)


@command
@cli_command
def compare(n, k, format=None, max_terms=None, ascii=False, loglevel=None,
            conffile=None):
    """Compares the snowflake after n iterations with the one after k
    iterations.

    Differences are n minus k and ratios are n over k.

    :param n: Iterations of the first snowflake.
    :param k: Iterations of the second snowflake.
    :param -f, --format: Output format, text or json.
    :param --max-terms <int>: Quotient terms before a ratio is truncated.
    :param --ascii: Prints G1 instead of ①.
    :param --loglevel: Level for logging messages. Defaults to `warning`.
    :param -c, --conffile: Path to a config file.
    """
    config = _setup(format=format, max_terms=max_terms, ascii=ascii,
                    loglevel=loglevel, conffile=conffile)
    _compare(n, k, config)


@command('sum')
@arg('params', nargs='+')
@cli_command
def sum_(kind, params, parallel=False, format=None, max_terms=None,
         ascii=False, loglevel=None, conffile=None):
    """Sums with grossone addends.

    ``sum arith FIRST STEP COUNT`` sums COUNT terms of an arithmetic
    progression and ``sum geom RATIO COUNT`` sums 1 + RATIO + ... +
    RATIO^(COUNT-1).

    :param kind: arith or geom.
    :param params: The parameters of the sum followed by how many addends.
    :param --parallel: The sum is not sequential, so it can have more
      than ① addends.
    :param -f, --format: Output format, text or json.
    :param --max-terms <int>: Quotient terms before a division is
      truncated.
    :param --ascii: Prints G1 instead of ①.
    :param --loglevel: Level for logging messages. Defaults to `warning`.
    :param -c, --conffile: Path to a config file.
    """
    config = _setup(format=format, max_terms=max_terms, ascii=ascii,
                    loglevel=loglevel, conffile=conffile)
    try:
        kind = SeriesKind(kind)
    except ValueError:
        raise BadConfig('Unknown kind of sum {}. Use arith or geom'.format(
            kind))

    expected = 3 if kind is SeriesKind.ARITHMETIC else 2
    if len(params) != expected:
        raise BadConfig('sum {} needs {} parameters'.format(kind.value,
                                                            expected))

    values = [_exact_value(p, config) for p in params]
    if kind is SeriesKind.GEOMETRIC:
        values[0] = values[0].constant
    spec = SumSpec(kind, tuple(values[:-1]), values[-1],
                   sequential=not parallel)
    result = spec.evaluate()

    if config.format == 'json':
        print(lang.to_json(result))
    else:
        print(lang.print_canonical(result, ascii=config.ascii))


@command
@cli_command
def sets(format=None, ascii=False, loglevel=None, conffile=None):
    """Shows the number of elements of some infinite sets, the order of
    those numbers and the relations between them.

    :param -f, --format: Output format, text or json.
    :param --ascii: Prints G1 instead of ①.
    :param --loglevel: Level for logging messages. Defaults to `warning`.
    :param -c, --conffile: Path to a config file.
    """
    config = _setup(format=format, ascii=ascii, loglevel=loglevel,
                    conffile=conffile)
    entries = catalog.catalog()
    chain = catalog.ordering_chain()
    checks = catalog.set_algebra_checks()

    if config.format == 'json':
        print(lang.dumps({'entries': lang.to_dict(entries),
                          'chain': lang.to_dict(chain),
                          'chain_check': 'OK',
                          'algebra': lang.to_dict(checks)}))
        return

    fmt = functools.partial(lang.format_measure, ascii=config.ascii)
    for entry in entries:
        print('{} | {} | {}'.format(entry.description,
                                    entry.cardinality.value,
                                    fmt(entry.count)))
    print('')
    print(' < '.join(fmt(value) for value in chain))
    print('chain check: OK')
    for check in checks:
        print('{}: {}'.format(check.name, 'OK' if check.passed else 'FAILED'))


def run(argv=None):
    """Entry point of the grosskoch program. Usage errors in the command
    line exit with 1 like any other error in the input.

    :param argv: The command line arguments, ``sys.argv[1:]`` if None.
    """
    argv = sys.argv[1:] if argv is None else argv
    try:
        command, args = main.parse(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors
        if e.code == 2:
            sys.exit(1)
        raise
    return command(*args)


if __name__ == '__main__':
    run()
