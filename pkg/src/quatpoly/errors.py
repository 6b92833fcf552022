"""Exception hierarchy shared by all quatpoly modules."""


class QuatpolyError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(QuatpolyError, ZeroDivisionError):
    """Inverse of the zero quaternion (or conjugation by zero) requested."""


class ArityMismatch(QuatpolyError, ValueError):
    """Polynomial arity and point/operand length disagree."""


class ArityExceeded(QuatpolyError, ValueError):
    """Parsed variable index exceeds the declared arity."""


class ZeroDirection(QuatpolyError, ValueError):
    """A pure direction argument was zero."""


class ZeroCoordinate(QuatpolyError, ValueError):
    """Suffix conjugation requested at a zero coordinate."""


class NotCommuting(QuatpolyError, ValueError):
    """A pairwise-commuting tuple was required."""


class AllReal(QuatpolyError, ValueError):
    """A commuting tuple with at least one nonreal coordinate was required."""


class NotUnitImaginary(QuatpolyError, ValueError):
    """Sphere parameter must be a unit pure quaternion (a square root of -1)."""


class VerificationFailed(QuatpolyError, ArithmeticError):
    """An internal cross-check failed; indicates a bug or malformed input."""


class InvariantViolation(QuatpolyError, AssertionError):
    """A structural invariant that construction should guarantee was broken."""


class Inconsistent(QuatpolyError, ArithmeticError):
    """Linear system has no solution."""


class Underdetermined(QuatpolyError, ArithmeticError):
    """Linear system has more than one solution."""


class ExactnessError(QuatpolyError, ArithmeticError):
    """Exact-mode construction needs an irrational value.

    Callers may convert their inputs to float and retry.
    """


class ExactConjugatorUnavailable(ExactnessError):
    """No rational conjugator exists for this direction pair."""


class ExactSphereUnavailable(ExactnessError):
    """Sphere radius is irrational; the sphere has no exact parametrization."""


class ParseError(QuatpolyError, ValueError):
    """Syntax error in a polynomial/point expression, with source span."""

    def __init__(self, message, span):
        super().__init__(f"{message} (at {span[0]}..{span[1]})")
        self.span = span
