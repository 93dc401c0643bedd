import logging
import math
from functools import partial
from typing import Tuple

import numpy as np

from vanderspec.bridge import DyadicPhases, cot_kernel, i_phi_all_shifts, sample_bridge, shift_bridge
from vanderspec.experiments.config import ExperimentConfig
from vanderspec.experiments.runner import base_metadata, run_trials, trial_seed
from vanderspec.experiments.stats import ecdf, mean, stderr
from vanderspec.exporter import ResultTable

logger = logging.getLogger(__name__)

TRACE_SHIFT = 1.5 * math.pi


def bridge_trial(config: ExperimentConfig, trial_index: int) -> Tuple[float, float, np.ndarray]:
    """(I_pi, I*, I_phi at every dyadic phase) for one bridge path."""
    path = sample_bridge(config.grid, trial_seed(config, trial_index))
    values = i_phi_all_shifts(path, max(config.eps, path.spacing))
    dyadic = values[DyadicPhases(config.depth).grid_indices(path.M)]
    return float(values[path.M // 2]), float(dyadic.max()), dyadic


def bridge_trace(config: ExperimentConfig) -> ResultTable:
    """Path 0 on its grid with the path shifted by 3 pi / 2 and the kernel sin/(1 - cos)."""
    path = sample_bridge(config.grid, trial_seed(config, 0))
    psi = path.grid()
    kernel = np.full(psi.size, np.nan)
    kernel[1:-1] = cot_kernel(psi[1:-1])
    shifted = shift_bridge(path, TRACE_SHIFT).values
    return ResultTable([("psi", "rad"), ("W", "1"), ("W_shifted", "1"), ("kernel", "1")],
                       rows=np.column_stack([psi, path.values, shifted, kernel]).tolist())


def run_bridge_sim(config: ExperimentConfig) -> ResultTable:
    """
    Per-path I_pi and I* with companions: I_phi over the dyadic phases, the empirical CDF of I*
    and the single-path trace.
    """
    results = run_trials(partial(bridge_trial, config), config.trials)
    at_pi = [value for value, _, _ in results]
    stars = [star for _, star, _ in results]
    phases = DyadicPhases(config.depth).phases

    metadata = base_metadata(config)
    metadata["mean_i_pi"] = mean(at_pi)
    metadata["stderr_i_pi"] = stderr(at_pi)
    table = ResultTable([("path", "1"), ("i_pi", "1"), ("i_star", "1")],
                        rows=[[index, value, star] for index, (value, star) in enumerate(zip(at_pi, stars))],
                        metadata=metadata)

    dyadic = ResultTable([("path", "1"), ("phi", "rad"), ("i_phi", "1")])
    for index, (_, _, values) in enumerate(results):
        for phi, value in zip(phases, values):
            dyadic.append([index, phi, value])
    values, cdf = ecdf(stars)
    table.companions = {
        "dyadic": dyadic,
        "ecdf": ResultTable([("i_star", "1"), ("cdf", "1")], rows=np.column_stack([values, cdf]).tolist()),
        "trace": bridge_trace(config),
    }
    logger.info(f"Bridge simulation over {config.trials} paths: mean I_pi {metadata['mean_i_pi']:.4f} "
                f"(stderr {metadata['stderr_i_pi']:.4f})")
    return table
