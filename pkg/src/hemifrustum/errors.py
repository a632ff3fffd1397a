"""Exception hierarchy shared by every evaluator."""


class HemifrustumError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HemifrustumError, ValueError):
    """An argument lies outside the operation's domain."""


class PoleError(HemifrustumError, ZeroDivisionError):
    """A denominator Pochhammer factor vanished before the series terminated."""


class DivergenceError(HemifrustumError, ArithmeticError):
    """The requested series does not converge at the given arguments."""


class ConvergenceError(HemifrustumError, ArithmeticError):
    """An evaluation ran out of budget before meeting its tolerance.

    ``partial`` carries whatever best estimate was available.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
