import logging
import math

import numpy as np

from vanderspec.ensemble.phases import PhaseVector

logger = logging.getLogger(__name__)


class LogDeterminant:
    """
    log det(V*V) for a square classical Vandermonde matrix.

    `degenerate` is set (and value is -inf) when two phases coincide.
    """

    def __init__(self, value: float, degenerate: bool = False):
        self.value = value
        self.degenerate = degenerate

    def __float__(self):
        return self.value

    def __repr__(self):
        return f"LogDeterminant(value={self.value}, degenerate={self.degenerate})"


def _check_square(phases: PhaseVector, N: int):
    if phases.d != 1:
        raise ValueError("log-determinant identities need one-dimensional phases")
    if phases.L != N:
        raise ValueError(f"log-determinant identities need L = N, got L={phases.L}, N={N}")


def logdet_gram(phases: PhaseVector, N: int) -> LogDeterminant:
    """
    log det(V*V) = sum_{p<q} 2 log|z_p - z_q| - N log N, summed in the log domain.

    |z_p - z_q| is evaluated as 2 |sin(pi (theta_p - theta_q))| so that close nodes keep
    their relative accuracy.
    """
    _check_square(phases, N)
    theta = phases.column(0)
    p, q = np.triu_indices(N, k=1)
    distances = 2.0 * np.abs(np.sin(np.pi * (theta[p] - theta[q])))
    if distances.size and distances.min() == 0.0:
        logger.debug("Coincident phases, log-determinant is -inf")
        return LogDeterminant(-math.inf, degenerate=True)
    value = math.fsum(2.0 * np.log(distances)) - N * math.log(N)
    return LogDeterminant(value)


def trace_log(phases: PhaseVector, N: int) -> LogDeterminant:
    """tr_N log(V*V) = log det(V*V) / N."""
    logdet = logdet_gram(phases, N)
    if logdet.degenerate:
        return logdet
    return LogDeterminant(logdet.value / N)
