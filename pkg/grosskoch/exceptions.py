# -*- coding: utf-8 -*-


class GrossError(Exception):
    """Base for every error raised by grosskoch. ``position`` is the byte
    offset into the expression source when the error comes from an
    expression."""

    def __init__(self, msg='', position=None):
        super().__init__(msg)
        self.position = position

    def __str__(self):
        msg = super().__str__()
        if self.position is None:
            return msg
        return '{} (at byte {})'.format(msg, self.position)


class DivisionByZero(GrossError, ZeroDivisionError):
    pass


class ZeroFactorization(GrossError):
    pass


class FactorizationTooLarge(GrossError):
    pass


class ZeroToNonpositive(GrossError):
    pass


class AlgebraicIrrational(GrossError):
    pass


class Unrepresentable(GrossError):
    pass


class ExponentDenominatorTooLarge(GrossError):
    pass


class NonIntegerExponent(GrossError):
    pass


class InvalidOracle(GrossError):
    pass


class InexactDivision(GrossError):

    def __init__(self, msg='', result=None, position=None):
        super().__init__(msg, position=position)
        self.result = result


class SequentialLimitExceeded(GrossError):
    pass


class NonpositiveCount(GrossError):
    pass


class UnitRatio(GrossError):
    pass


class NegativeCount(GrossError):
    pass


class UnitMismatch(GrossError):
    pass


class StepLimit(GrossError):
    pass


class InvalidIterationCount(GrossError):
    pass


class InvalidMeasure(GrossError):
    pass


class ExpressionSyntaxError(GrossError):
    pass


class UnknownIdentifier(ExpressionSyntaxError):
    pass


class BadConfig(GrossError):
    pass


class InternalInvariantError(GrossError):
    """Something that must always hold did not. The cli exits with 2."""


class ChainViolation(InternalInvariantError):
    pass


class InvariantViolation(InternalInvariantError):
    pass
