import logging
from typing import Sequence, Tuple

import numpy as np

from vanderspec.ensemble.dirichlet import build_dirichlet_gram, dirichlet_kernel
from vanderspec.ensemble.phases import PhaseVector, RandomSource, as_generator

logger = logging.getLogger(__name__)


def min_eig_2x2_bound(phases: PhaseVector, N: int) -> float:
    """
    Upper bound on lambda_1 from 2x2 principal minors: min over pairs of 1 - |D_N(2 pi (theta_k - theta_l))|.

    The minor [[1, D], [D, 1]] has smallest eigenvalue 1 - |D|, and eigenvalues interlace.
    """
    if phases.L < 2:
        raise ValueError("the 2x2 bound needs at least two phases")
    if phases.d != 1:
        raise ValueError("the 2x2 bound is stated for one-dimensional phases")
    theta = phases.column(0)
    k, l = np.triu_indices(phases.L, k=1)
    kernel = dirichlet_kernel(2.0 * np.pi * (theta[k] - theta[l]), N)
    return float(np.min(1.0 - np.abs(kernel)))


def circular_min_spacing(theta) -> float:
    """Smallest circular distance min(|a - b|, 1 - |a - b|) between phases in [0, 1)."""
    ordered = np.sort(np.asarray(theta, dtype=np.float64))
    if ordered.size < 2:
        raise ValueError("spacing needs at least two phases")
    gaps = np.diff(ordered)
    wrap = 1.0 - ordered[-1] + ordered[0]
    return float(min(gaps.min(), wrap))


def min_spacing_cdf_check(N: int, delta: float, trials: int = 10_000, seed: RandomSource = 0) -> Tuple[float, float]:
    """
    Compare P(min circular spacing > delta) for N uniform phases with (1 - N delta)_+^(N-1).

    Returns:
        tuple: (empirical frequency over trials, exact value)
    """
    if delta < 0.0:
        raise ValueError(f"delta must be >= 0, got {delta}")
    if N < 2:
        raise ValueError(f"spacing needs N >= 2, got {N}")
    exact = max(1.0 - N * delta, 0.0) ** (N - 1)
    rng = as_generator(seed)
    ordered = np.sort(rng.random((trials, N)), axis=1)
    gaps = np.diff(ordered, axis=1)
    wrap = 1.0 - ordered[:, -1] + ordered[:, 0]
    spacing = np.minimum(gaps.min(axis=1), wrap)
    empirical = float(np.mean(spacing > delta))
    logger.debug(f"Spacing check N={N}, delta={delta}: empirical {empirical:.4f}, exact {exact:.4f}")
    return empirical, exact


def max_row_sum_bound(A) -> float:
    """Gershgorin-type upper bound lambda_max(A) <= max_k sum_m |A(k, m)|."""
    a = np.asarray(A)
    return float(np.abs(a).sum(axis=1).max())


def principal_submatrix(A, indices: Sequence[int]) -> np.ndarray:
    idx = np.asarray(indices, dtype=np.intp)
    return np.asarray(A)[np.ix_(idx, idx)]


def most_populated_cell(phases: PhaseVector, eps: float) -> np.ndarray:
    """Indices of the phases falling in the fullest cell of an eps-grid of [0, 1)^d."""
    if eps <= 0.0 or eps > 1.0:
        raise ValueError(f"cell side must be in (0, 1], got {eps}")
    cells = np.floor(phases.entries / eps).astype(np.int64)
    keys, inverse, counts = np.unique(cells, axis=0, return_inverse=True, return_counts=True)
    fullest = int(np.argmax(counts))
    return np.flatnonzero(inverse.reshape(-1) == fullest)


def occupancy_lower_bound(phases: PhaseVector, N: int, eps: float) -> Tuple[int, float]:
    """
    Lower bound on lambda_max of the Dirichlet Gram matrix from its fullest eps-cell Gamma.

    The Rayleigh quotient of the indicator of Gamma is 1^T A_Gamma 1 / |Gamma| <= lambda_max(A),
    and it is at least |Gamma| D_N(2 pi eps)**d when eps < 1/N.

    Returns:
        tuple: (|Gamma|, Rayleigh quotient)
    """
    members = most_populated_cell(phases, eps)
    A = build_dirichlet_gram(phases, N)
    block = principal_submatrix(A, members)
    return int(members.size), float(block.sum() / members.size)
