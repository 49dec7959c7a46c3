"""Exception types shared across the package."""
from __future__ import annotations


class CycsieveError(Exception):
    """Base class for every error raised by this package."""


class NonPolynomialQuotient(CycsieveError, ArithmeticError):
    """An exact polynomial division left a nonzero remainder.

    The CSP checker treats this as data: when dividing X(q) by [n]_q fails,
    the cyclic action on X cannot be free and sieve.
    """

    def __init__(self, message: str, quotient=None, remainder=None):
        super().__init__(message)
        self.quotient = quotient
        self.remainder = remainder


class NegativeCoefficient(CycsieveError, ValueError):
    pass


class ZeroPolynomial(CycsieveError, ValueError):
    pass


class NonUnitDivisor(CycsieveError, ZeroDivisionError):
    pass


class BadTauShape(CycsieveError, ValueError):
    """The permutation is not of cycle type (m^k, 1) or (m^k, 1, 1) with m >= 2."""


class NonFreeAction(CycsieveError, ValueError):
    pass


class BudgetExceeded(CycsieveError, RuntimeError):
    pass


class AdmissibilityViolation(CycsieveError, ValueError):
    pass


class InternalDivisionFailure(CycsieveError, ArithmeticError):
    """A division that is a theorem turned out inexact: this is a bug."""


class NonPolynomialResult(CycsieveError, ArithmeticError):
    pass


class FormulaMismatch(CycsieveError, AssertionError):
    def __init__(self, message: str, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right
