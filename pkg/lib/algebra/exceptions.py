"""
Exceptions raised by the algebra library.

Every error derives from AlgebraError; input problems additionally derive from
ValueError so callers that only know the builtin hierarchy still catch them.
"""


class AlgebraError(Exception):
    """Base class for all errors of the algebra library."""


class InputError(AlgebraError, ValueError):
    """Malformed or inconsistent input."""


class PolynomialSyntaxError(InputError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(InputError):
    def __init__(self, name):
        super().__init__(f"unknown variable '{name}'")
        self.name = name


class RingMismatchError(InputError):
    pass


class DegreeMismatchError(InputError):
    pass


class NonLinearFactorError(InputError):
    pass


class AmbientMismatchError(InputError):
    pass


class ScenarioError(InputError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DivisionByZeroError(AlgebraError, ZeroDivisionError):
    pass


class BadPrimeError(AlgebraError):
    """The chosen prime divides a denominator; pick another prime."""


class BudgetExceededError(AlgebraError):
    """A Groebner computation ran past its configured budget."""


class CannotCompleteError(AlgebraError):
    """A matrix without full column rank cannot be completed to an invertible one."""


class UndefinedProductError(AlgebraError):
    """The coordinatewise product of two points vanishes identically."""


class DegeneratePresentationError(AlgebraError):
    """A parametrization kept evaluating to the zero vector."""


class OutOfRangeError(AlgebraError):
    """No closed-form prediction applies to the requested ambient dimension."""
