import logging
from functools import partial
from typing import Tuple

import numpy as np

from vanderspec.ensemble import ExponentSequence, build_generalized, sample_phases
from vanderspec.experiments.config import ExperimentConfig
from vanderspec.experiments.runner import base_metadata, run_trials, trial_seed
from vanderspec.experiments.stats import histogram, mean, stderr
from vanderspec.exporter import ResultTable
from vanderspec.moments import count_solutions, empirical_moment, four_cycle_partition, mp_bin_masses, mp_density
from vanderspec.spectral import eig_hermitian_lapack, gram

logger = logging.getLogger(__name__)

MOMENT_ORDERS = (1, 2, 3, 4)
_MANTISSA_LIMIT = 2 ** 53


def mp_trial(config: ExperimentConfig, N: int, trial_index: int) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues of VV* and tr_N((VV*)**r), r = 1..4, for one generalized Vandermonde matrix."""
    k = ExponentSequence.from_name(config.k_sequences()[0])
    bits = k.required_bits(N) if k.values(N)[-1] >= _MANTISSA_LIMIT else None
    phases = sample_phases(N, seed=trial_seed(config, trial_index, N), bits=bits)
    V = build_generalized(phases, k, N)
    eigenvalues = eig_hermitian_lapack(gram(V, outer=True)).values
    return eigenvalues, np.array([empirical_moment(V, r) for r in MOMENT_ORDERS])


def run_mp_hist(config: ExperimentConfig) -> ResultTable:
    """
    Pooled eigenvalue histogram of VV* with the Marchenko-Pastur overlay for k_p = 2**p.

    The metadata carries the empirical moments and, with the overlay, the total-variation
    distance between the histogram and the Marchenko-Pastur bin masses.
    """
    N = config.ns[0]
    kind = config.k_sequences()[0]
    results = run_trials(partial(mp_trial, config, N), config.trials)
    pooled = np.maximum(np.concatenate([eigenvalues for eigenvalues, _ in results]), 0.0)
    moments = np.array([moments for _, moments in results])
    edges, masses = histogram(pooled, bins=config.bins, value_range=(0.0, float(pooled.max())))
    centers = 0.5 * (edges[:-1] + edges[1:])
    widths = np.diff(edges)

    overlay = kind == "pow2"
    columns = [("bin_left", "1"), ("bin_right", "1"), ("bin_center", "1"), ("mass", "1"), ("density", "1")]
    if overlay:
        columns += [("mp_density", "1"), ("mp_mass", "1")]
    metadata = base_metadata(config)
    for column, r in enumerate(MOMENT_ORDERS):
        metadata[f"moment_{r}"] = mean(moments[:, column])
        metadata[f"moment_{r}_stderr"] = stderr(moments[:, column])

    mp_masses = mp_bin_masses(edges) if overlay else None
    if overlay:
        outside = max(0.0, 1.0 - float(mp_masses.sum()))
        metadata["tv_distance"] = 0.5 * (float(np.abs(masses - mp_masses).sum()) + outside)
        logger.info(f"Marchenko-Pastur comparison N={N}: total variation {metadata['tv_distance']:.4f}")

    table = ResultTable(columns, metadata=metadata)
    for i in range(masses.size):
        row = [edges[i], edges[i + 1], centers[i], masses[i], masses[i] / widths[i]]
        if overlay:
            row += [mp_density(centers[i]), mp_masses[i]]
        table.append(row)
    logger.info(f"Empirical moments N={N} ({kind}): "
                + ", ".join(f"m{r}={metadata[f'moment_{r}']:.4f}" for r in MOMENT_ORDERS))
    return table


def run_crossing_count(config: ExperimentConfig) -> ResultTable:
    """Exact |S_rho,N| and |S_rho,N| / N**3 of the 4-cycle crossing partition for every sequence and N."""
    rho = four_cycle_partition()
    sequences = config.k_sequences()
    columns = [("N", "1")]
    for kind in sequences:
        columns += [(f"count_{kind}", "1"), (f"normalized_{kind}", "1")]
    table = ResultTable(columns, metadata=base_metadata(config))
    for N in config.ns:
        row = [N]
        for kind in sequences:
            solution = count_solutions(rho, N, ExponentSequence.from_name(kind))
            row += [solution.count, solution.normalized]
            logger.debug(f"{solution}")
        table.append(row)
    logger.info(f"Counted the crossing partition for N in {config.ns} ({', '.join(sequences)})")
    return table
