"""Exception types shared across the package."""


class BiorthoError(Exception):
    """Base class."""


class DomainError(BiorthoError, ValueError):
    """Argument outside the domain of a function or proposition."""


class RegularityError(BiorthoError, ValueError):
    """A recurrence coefficient alpha_n or gamma_n vanished."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class SingularSystemError(BiorthoError, ValueError):
    """eta = 0 and delta0 = 0 simultaneously."""


class BudgetExceeded(BiorthoError, RuntimeError):
    """Adaptive quadrature ran out of panels; carries the partial value."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
