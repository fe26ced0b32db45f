# tricomi/core/errors.py
from typing import Any


class TricomiError(Exception):
    """Base class for every error raised by the library."""


class DomainError(TricomiError, ValueError):
    """Argument outside the domain of a function."""


class OrderError(DomainError):
    """Integer order where the definition needs a non-integer one (K, N)."""


class PoleError(DomainError):
    """Gamma evaluated at a nonpositive integer."""


class ParameterError(TricomiError, ValueError):
    """Invalid parameter combination."""


class ParityError(ParameterError):
    pass


class PreconditionError(ParameterError):
    pass


class SingularLocusError(TricomiError, ValueError):
    """Evaluation on the characteristic cone or on the jump sphere |x| = scale."""


class DivergenceError(TricomiError, ArithmeticError):
    pass


class ConvergenceError(TricomiError, ArithmeticError):
    """A series, quadrature or extrapolation did not reach its tolerance.

    The partial estimate is kept so callers can report it.
    """

    def __init__(self, message: str, partial: float = float("nan"), error: float = float("inf"),
                 diagnostics: dict[str, Any] | None = None):
        super().__init__(message)
        self.partial = partial
        self.error = error
        self.diagnostics = diagnostics or {}


class QuadratureError(ConvergenceError):
    pass


class ExtrapolationError(ConvergenceError):
    pass
