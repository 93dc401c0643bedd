import logging
from functools import partial

from vanderspec.circlepoly.sign_flip import RandpolyResult, random_polynomial_two_logmax
from vanderspec.experiments.config import ExperimentConfig
from vanderspec.experiments.runner import base_metadata, run_trials, trial_seed
from vanderspec.experiments.stats import mean, stderr
from vanderspec.exporter import ResultTable

logger = logging.getLogger(__name__)


def polymax_trial(config: ExperimentConfig, N: int, trial_index: int) -> float:
    return random_polynomial_two_logmax(N, trial_seed(config, trial_index, N))


def run_polymax_bound(config: ExperimentConfig) -> ResultTable:
    """
    Average of 2 log max|P| over random unit-circle polynomials against both eps thresholds.
    """
    table = ResultTable([("N", "1"), ("mean_two_logmax", "1"), ("stderr", "1"), ("threshold_randpoly", "1"),
                         ("threshold_main_comb", "1"), ("frequency", "1"), ("frequency_main_comb", "1")],
                        metadata=base_metadata(config))
    for N in config.ns:
        values = run_trials(partial(polymax_trial, config, N), config.trials)
        result = RandpolyResult(N, config.eps, values)
        table.append([N, mean(values), stderr(values), result.threshold_randpoly, result.threshold_main_comb,
                      result.frequency, result.frequency_main_comb])
        logger.info(f"Polynomial maximum N={N}: mean 2 log max|P| = {mean(values):.4f}, "
                    f"frequency {result.frequency:.4f}")
    return table
