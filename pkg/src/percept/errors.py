"""Exception types shared across the package."""


class PerceptError(Exception):
    """Base class for all errors raised by this package."""


class ConstraintViolation(PerceptError, ValueError):
    """A parameter set breaks one of the behavioral-model constraints.

    The ``constraint`` attribute names the violated property: one of
    ``concavity``, ``convexity``, ``loss_aversion``, or ``reference``.
    """

    def __init__(self, constraint: str, message: str):
        self.constraint = constraint
        self.detail = message
        super().__init__(f"{constraint}: {message}")


class DomainError(PerceptError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ToleranceNotMet(PerceptError, RuntimeError):
    """Quadrature could not reach the requested tolerance within budget.

    Carries the best estimate so callers can inspect how far off it was.
    """

    def __init__(self, message: str, value: float, abs_error: float,
                 evaluations: int):
        self.value = value
        self.abs_error = abs_error
        self.evaluations = evaluations
        super().__init__(message)
