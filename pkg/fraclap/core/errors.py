class FracLapError(Exception):
    """Base class of all errors raised by fraclap."""


class DomainError(FracLapError, ValueError):
    """An argument lies outside the domain of the operation."""


class SingularityError(DomainError):
    """The operation is evaluated at (or numerically at) a singular point."""


class LogCaseError(DomainError):
    """2s = n: the power-law fundamental solution does not exist.

    The caller should use the logarithmic fundamental solution instead.
    """


class UnsupportedCaseError(DomainError):
    """The requested (dimension, exponent) pair is not covered."""


class AccuracyError(FracLapError, ArithmeticError):
    """A numerical procedure failed to reach its accuracy contract."""


class AccuracyWarning(UserWarning):
    """A numerical result is usable but below the requested accuracy."""
