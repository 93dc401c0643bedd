import logging
import math
from typing import Tuple, Union

import numpy as np
import scipy.linalg

from vanderspec.ensemble.phases import PhaseVector, SeedSpec, sample_phases
from vanderspec.ensemble.vandermonde import ComplexMatrix
from vanderspec.errors import SingularMatrixError
from vanderspec.inverse.symmetric import elem_sym_excluding

logger = logging.getLogger(__name__)


class InverseMatrix:
    """
    Inverse of a square Vandermonde matrix.

    Attributes:
        entries (np.ndarray): N x N complex entries M(m, n)
        log_denominators (np.ndarray): log prod_{j != m} |x_m - x_j| per row
        scale (float): 1 for the raw matrix rows x**0..x**(N-1), sqrt(N) for the normalized one
    """

    def __init__(self, entries, log_denominators, scale: float = 1.0):
        self.entries = np.asarray(entries, dtype=np.complex128)
        self.log_denominators = np.asarray(log_denominators, dtype=np.float64)
        self.scale = scale

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    @property
    def row_abs_sums(self) -> np.ndarray:
        return np.abs(self.entries).sum(axis=1)

    def __repr__(self):
        return f"InverseMatrix(order={self.order}, scale={self.scale:.6g})"


def raw_vandermonde(x) -> np.ndarray:
    """Un-normalized square matrix with rows x**0, ..., x**(N-1)."""
    nodes = np.asarray(x, dtype=np.complex128).reshape(-1)
    return np.vander(nodes, increasing=True).T


def _log_denominator(nodes: np.ndarray, m: int) -> Tuple[float, float]:
    diffs = nodes[m] - np.delete(nodes, m)
    magnitudes = np.abs(diffs)
    if magnitudes.size and magnitudes.min() == 0.0:
        raise SingularMatrixError(f"node {m} coincides with another node")
    return math.fsum(np.log(magnitudes)), float(np.angle(diffs).sum())


def vandermonde_inverse(x, normalized: bool = False) -> InverseMatrix:
    """
    Closed-form inverse M(m, n) = (-1)**(N-1-n) sigma^m_{N-1-n} / prod_{j != m} (x_m - x_j) (0-based m, n).

    Denominators are carried as (log-magnitude, phase) and combined with each coefficient in
    the log domain before exponentiating.

    Args:
        x: N distinct complex nodes
        normalized (bool): invert V / sqrt(N) instead of the raw matrix

    Raises:
        SingularMatrixError: for duplicate nodes
    """
    nodes = np.asarray(x, dtype=np.complex128).reshape(-1)
    n = nodes.size
    scale = math.sqrt(n) if normalized else 1.0
    entries = np.empty((n, n), dtype=np.complex128)
    log_denominators = np.empty(n)
    signs = (-1.0) ** (n - 1 - np.arange(n))
    for m in range(n):
        log_mag, phase = _log_denominator(nodes, m)
        log_denominators[m] = log_mag
        numerators = signs * elem_sym_excluding(nodes, m).coefficients[::-1]
        with np.errstate(divide="ignore"):
            log_num = np.log(np.abs(numerators))
        entries[m] = np.exp(log_num - log_mag + math.log(scale)) * np.exp(1j * (np.angle(numerators) - phase))
    return InverseMatrix(entries, log_denominators, scale)


def row_abs_sums(M: InverseMatrix) -> np.ndarray:
    """beta_p = sum_q |M(p, q)| by direct entry summation."""
    return M.row_abs_sums


def row_abs_sums_closed_form(x, normalized: bool = True) -> np.ndarray:
    """beta_p = sqrt(N) sum_r |sigma^p_r| / prod_{q != p} |z_p - z_q|, evaluated in the log domain."""
    nodes = np.asarray(x, dtype=np.complex128).reshape(-1)
    n = nodes.size
    log_scale = 0.5 * math.log(n) if normalized else 0.0
    betas = np.empty(n)
    for p in range(n):
        log_mag, _ = _log_denominator(nodes, p)
        betas[p] = math.exp(log_scale + math.log(elem_sym_excluding(nodes, p).abs_sum()) - log_mag)
    return betas


def _as_array(V: Union[ComplexMatrix, np.ndarray]) -> np.ndarray:
    if isinstance(V, ComplexMatrix):
        return V.entries
    return np.asarray(V, dtype=np.complex128)


def distance_identity_check(V: Union[ComplexMatrix, np.ndarray]) -> Tuple[float, float]:
    """
    Both sides of Tr(M*M) = sum_i dist(X_i, span{X_j : j != i})**(-2) for M = V^{-1}.

    Distances are the length of the projection of X_i on the orthogonal complement of the
    other columns, taken from a full Householder QR of those columns.

    Returns:
        tuple: (lhs, rhs)
    """
    a = _as_array(V)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise ValueError(f"distance identity needs a square matrix, got shape {a.shape}")
    try:
        M = scipy.linalg.inv(a)
    except (scipy.linalg.LinAlgError, ValueError) as e:
        raise SingularMatrixError(f"matrix is singular: {e}")
    lhs = float(np.sum(np.abs(M) ** 2))

    rhs_terms = []
    for i in range(n):
        column = a[:, i]
        if n == 1:
            distance = float(np.linalg.norm(column))
        else:
            others = np.delete(a, i, axis=1)
            q_full, _ = scipy.linalg.qr(others, mode="full")
            complement = q_full[:, n - 1]
            distance = float(abs(np.vdot(complement, column)))
        if distance == 0.0:
            raise SingularMatrixError(f"column {i} lies in the span of the others")
        rhs_terms.append(distance ** -2)
    return lhs, math.fsum(rhs_terms)


def inverse_trace(phases: PhaseVector) -> float:
    """tr_N((V*V)^{-1}) for the normalized square Vandermonde matrix on the given phases."""
    M = vandermonde_inverse(phases.nodes(), normalized=True)
    return float(np.sum(np.abs(M.entries) ** 2) / M.order)


class InverseMomentProbe:
    """Per-trial values of tr_N((V*V)^{-1}) and their running means."""

    def __init__(self, values):
        self.values = np.asarray(values, dtype=np.float64)
        self.running_means = np.cumsum(self.values) / np.arange(1, self.values.size + 1)

    def spike_ratio(self) -> float:
        """Largest per-trial value over the median one."""
        return float(self.values.max() / np.median(self.values))

    def __repr__(self):
        return f"InverseMomentProbe(trials={self.values.size}, last_mean={self.running_means[-1]:.6g})"


def inverse_moment_probe(N: int, trials: int, seed: int = 0) -> InverseMomentProbe:
    """
    Running means of tr_N((V*V)^{-1}) over independent trials.

    The expectation is infinite; the output is meant for inspecting the heavy tail,
    nothing is asserted about convergence.
    """
    if N < 2:
        raise ValueError(f"the probe needs N >= 2, got {N}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    values = [inverse_trace(sample_phases(N, seed=SeedSpec(seed, t, "inverse-moment"))) for t in range(trials)]
    probe = InverseMomentProbe(values)
    logger.info(f"Inverse moment probe N={N}: {trials} trials, spike ratio {probe.spike_ratio():.3g}")
    return probe
