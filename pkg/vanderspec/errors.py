"""
Exceptions shared by the vanderspec modules.

Input validation errors derive from ValueError so that callers may keep catching
ValueError; numerical failures derive from RuntimeError.
"""


class InvalidDensityError(ValueError):
    """Inverse-CDF table is not monotone or leaves [0, 1]."""


class IndexOutOfRangeError(IndexError, ValueError):
    """A multi-index component lies outside {0, ..., N-1}."""


class SequenceExhaustedError(ValueError):
    """An explicit exponent sequence holds fewer values than requested."""


class SequenceOverflowError(ValueError):
    """Exponents do not fit the 64-bit exact-integer mode."""


class ConvergenceError(RuntimeError):
    """The Jacobi eigensolver did not converge within its sweep budget."""

    def __init__(self, residual: float, sweeps: int):
        self.residual = residual
        self.sweeps = sweeps
        super().__init__(f"Jacobi did not converge after {sweeps} sweeps (off-diagonal residual {residual:.3e})")


class SingularMatrixError(ValueError):
    """Matrix is singular, typically because two nodes coincide."""


class SearchFailureError(RuntimeError):
    """A sign-change scan did not bracket any root."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of the operation."""


class BudgetError(RuntimeError):
    """Requested computation exceeds the configured brute-force budget."""


class ResolutionError(ValueError):
    """Truncation parameter is finer than the grid resolves."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature did not reach the requested tolerance."""


class ConfigError(ValueError):
    """Invalid experiment configuration."""
