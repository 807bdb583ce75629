"""Exception types shared across the package."""


class SolverError(Exception):
    """Base class for numerical-solver failures."""


class SolverConvergenceError(SolverError):
    """Iterative eigensolver did not reach the requested residual.

    Carries the last residual so callers can decide whether to retry with
    a larger budget or report the partial result.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class GridTooSmallError(SolverError):
    """Finite-difference grid cannot represent the requested solution."""


class ConfigError(Exception):
    """Invalid or inconsistent run configuration (CLI exit code 2)."""
