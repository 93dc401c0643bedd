"""
Eigenvalue experiments: the atom at zero, the growth of the largest eigenvalue and the
minimum-eigenvalue sandwich of square Vandermonde matrices.
"""
import logging
import math
from functools import partial
from typing import Tuple

import numpy as np

from vanderspec.circlepoly import CirclePolynomial, lambda1_sandwich, main_comb_threshold, max_on_circle
from vanderspec.ensemble import build_dirichlet_gram, build_vandermonde, sample_phases
from vanderspec.errors import BudgetError, ConfigError
from vanderspec.experiments.config import ExperimentConfig
from vanderspec.experiments.runner import base_metadata, run_trials, trial_seed
from vanderspec.experiments.stats import mean, stderr
from vanderspec.exporter import ResultTable
from vanderspec.spectral import HermitianMatrix, eig_hermitian_lapack, gram, eig_hermitian, max_row_sum_bound, \
    occupancy_lower_bound

logger = logging.getLogger(__name__)

MAX_ROWS = 1024
MAX_COLUMNS = 4096
JACOBI_LIMIT = 64


def atom_trial(config: ExperimentConfig, N: int, trial_index: int) -> np.ndarray:
    """G(10**-p) = fraction of eigenvalues of V*V at most 10**-p, for every configured p."""
    L = config.columns(N)
    phases = sample_phases(L, d=config.d, seed=trial_seed(config, trial_index, N))
    eigenvalues = eig_hermitian_lapack(gram(build_vandermonde(phases, N))).values
    thresholds = 10.0 ** -np.array(config.p_values())
    return np.count_nonzero(eigenvalues[None, :] <= thresholds[:, None], axis=1) / L


def run_atom_probe(config: ExperimentConfig) -> ResultTable:
    table = ResultTable([("N", "1"), ("L", "1"), ("p", "1"), ("G", "1"), ("stderr", "1")], metadata=base_metadata(config))
    for N in config.ns:
        L = config.columns(N)
        if N ** config.d > MAX_ROWS or L > MAX_COLUMNS:
            raise BudgetError(f"atom probe limited to N**d <= {MAX_ROWS} and L <= {MAX_COLUMNS}, got N={N}, L={L}")
        g = np.array(run_trials(partial(atom_trial, config, N), config.trials))
        for column, p in enumerate(config.p_values()):
            table.append([N, L, p, mean(g[:, column]), stderr(g[:, column])])
        logger.info(f"Atom probe N={N}, L={L}: G(1e-{config.p_values()[-1]:g}) = {g[:, -1].mean():.4f}")
    return table


def maxeig_trial(config: ExperimentConfig, N: int, trial_index: int) -> Tuple[float, float, float]:
    """
    (lambda_L, Gershgorin row-sum bound, occupancy Rayleigh quotient) of the Dirichlet Gram matrix.

    The occupancy cells have side eps / N.
    """
    phases = sample_phases(config.columns(N), d=config.d, seed=trial_seed(config, trial_index, N))
    A = build_dirichlet_gram(phases, N)
    largest = eig_hermitian_lapack(HermitianMatrix(A)).largest
    _, quotient = occupancy_lower_bound(phases, N, min(config.eps, 1.0) / N)
    return largest, max_row_sum_bound(A), quotient


def run_maxeig_scan(config: ExperimentConfig) -> ResultTable:
    table = ResultTable([("N", "1"), ("L", "1"), ("mean_lambda_max", "1"), ("stderr_lambda_max", "1"),
                         ("max_lambda_max", "1"), ("mean_ratio_log", "1"), ("max_ratio_log", "1"),
                         ("mean_ratio_loglog", "1"), ("mean_row_sum_bound", "1"), ("mean_occupancy_bound", "1")],
                        metadata=base_metadata(config))
    for N in config.ns:
        L = config.columns(N)
        if N < 2:
            raise ConfigError(f"maximum-eigenvalue scan needs N >= 2, got {N}")
        if L > MAX_COLUMNS:
            raise BudgetError(f"maximum-eigenvalue scan limited to L <= {MAX_COLUMNS}, got L={L}")
        results = np.array(run_trials(partial(maxeig_trial, config, N), config.trials))
        largest = results[:, 0]
        log_size = config.d * math.log(N)
        loglog = math.log(log_size)
        table.append([N, L, mean(largest), stderr(largest), float(largest.max()), mean(largest) / log_size,
                      float(largest.max()) / log_size, mean(largest) * loglog / log_size, mean(results[:, 1]),
                      mean(results[:, 2])])
        logger.info(f"Maximum eigenvalue scan N={N}, L={L}: mean {mean(largest):.4f}, max {largest.max():.4f}")
    return table


def mineig_trial(config: ExperimentConfig, N: int, trial_index: int) -> Tuple[float, ...]:
    """
    (log lambda_1 or nan, the four log bounds, bracketed or nan, main-comb event) for one square matrix.

    The eigensolver value is computed by Jacobi for N <= 64 only.
    """
    phases = sample_phases(N, seed=trial_seed(config, trial_index, N))
    P = CirclePolynomial.from_phases(phases)
    bounds = lambda1_sandwich(P)
    _, log_max = max_on_circle(P)
    exceeds = float(2.0 * log_max >= main_comb_threshold(N, config.eps))
    log_lambda1, bracketed = float('nan'), float('nan')
    if N <= JACOBI_LIMIT:
        smallest = eig_hermitian(gram(build_vandermonde(phases, N))).smallest
        log_lambda1 = math.log(smallest) if smallest > 0 else float('-inf')
        bracketed = float(bounds.brackets(log_lambda1))
    return (log_lambda1, bounds.log_lower, bounds.log_upper, bounds.log_upper_4n2, bounds.log_upper_hadamard,
            bracketed, exceeds)


def run_mineig_scan(config: ExperimentConfig) -> ResultTable:
    table = ResultTable([("N", "1"), ("mean_log_lambda1", "1"), ("mean_log_lower", "1"), ("mean_log_upper", "1"),
                         ("mean_log_upper_4n2", "1"), ("mean_log_upper_hadamard", "1"), ("bracket_fraction", "1"),
                         ("threshold_main_comb", "1"), ("frequency_main_comb", "1")],
                        metadata=base_metadata(config))
    for N in config.ns:
        results = np.array(run_trials(partial(mineig_trial, config, N), config.trials))
        solved = N <= JACOBI_LIMIT
        table.append([N, float(results[:, 0].mean()) if solved else float('nan'),
                      mean(results[:, 1]), mean(results[:, 2]), mean(results[:, 3]), mean(results[:, 4]),
                      float(results[:, 5].mean()) if solved else float('nan'),
                      main_comb_threshold(N, config.eps), mean(results[:, 6])])
        logger.info(f"Minimum eigenvalue scan N={N}: main comb frequency {results[:, 6].mean():.4f}")
    return table
