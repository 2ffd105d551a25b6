"""Exception hierarchy.

Every domain error carries a stable ``code`` (the class name) and an optional
``context`` mapping so the CLI can emit a machine-readable error object.
"""


class TrigonalError(Exception):
    """Base class for all domain errors raised by the package."""

    def __init__(self, message="", **context):
        super().__init__(message)
        self.message = message
        self.context = context

    @property
    def code(self):
        return type(self).__name__


class FieldMismatch(TrigonalError, TypeError):
    pass


class DivisionByZero(TrigonalError, ZeroDivisionError):
    pass


class BadField(TrigonalError, ValueError):
    pass


class NotDivisible(TrigonalError, ArithmeticError):
    pass


class FieldTooLarge(TrigonalError, ValueError):
    pass


class RationalFieldUnsupported(TrigonalError, ValueError):
    pass


class BadWeight(TrigonalError, ValueError):
    pass


class SingularCurve(TrigonalError, ValueError):
    pass


class OffCurvePoint(TrigonalError, ValueError):
    pass


class KernelDimensionError(TrigonalError, ArithmeticError):
    """The linear system that should pin down a function up to scale did not."""

    def __init__(self, message="", dimension=None, **context):
        super().__init__(message, dimension=dimension, **context)
        self.dimension = dimension


class DerivativeRowSingular(TrigonalError, ArithmeticError):
    pass


class InvolutionCollision(TrigonalError, ArithmeticError):
    pass


class DegenerateClass(TrigonalError, ArithmeticError):
    """A class or intermediate divisor left the generic configuration.

    ``cause`` is a short machine-readable label; ``trace`` holds the partial
    reduction trace when raised from inside the reduction loop.
    """

    def __init__(self, message="", cause="unspecified", trace=None, **context):
        super().__init__(message, cause=cause, **context)
        self.cause = cause
        self.trace = trace


class PointOnI(TrigonalError, ArithmeticError):
    pass


class DegenerateConfiguration(TrigonalError, ArithmeticError):
    pass


class SpecialDivisor(TrigonalError, ValueError):
    pass
