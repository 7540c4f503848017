"""Exception hierarchy shared across the library."""


class RvrOptError(Exception):
    """Base class for all library errors."""


class ShapeError(RvrOptError):
    """An array argument does not have the required shape."""


class BasePointMismatch(RvrOptError):
    """Tangent vectors or points were combined across different base points."""


class NumericalError(RvrOptError):
    """A numerical kernel produced non-finite or otherwise invalid output."""


class OutOfInjectivityRadius(RvrOptError):
    """Inverse retraction requested outside the injectivity region."""


class ConfigError(RvrOptError):
    """Invalid configuration value or file."""


class LeastSquaresSingular(RvrOptError):
    """A per-column least-squares block is rank deficient (under-sampled column)."""


class DegenerateSpectrum(RvrOptError):
    """Eigenvalue gap too small to define a unique optimal subspace."""


class ConvergenceError(RvrOptError):
    """An iterative oracle failed to reach its tolerance within the budget."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class LineSearchError(RvrOptError):
    """Backtracking line search failed to find an acceptable step."""


class DivergenceError(RvrOptError):
    """A solver run diverged; carries the trace collected up to the failure."""

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace if trace is not None else []
