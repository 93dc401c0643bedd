import logging
import time

from vanderspec.experiments.bridge import run_bridge_sim
from vanderspec.experiments.config import ExperimentConfig, load_experiment_config, parse_ns, parse_p_range, \
    with_overrides, worker_count
from vanderspec.experiments.eigen import run_atom_probe, run_maxeig_scan, run_mineig_scan
from vanderspec.experiments.moments import run_crossing_count, run_mp_hist
from vanderspec.experiments.polynomials import run_polymax_bound
from vanderspec.experiments.runner import run_trials, trial_seed
from vanderspec.experiments.stats import mean, stderr, histogram, ecdf, ks_statistic
from vanderspec.exporter import ResultTable

logger = logging.getLogger(__name__)

EXPERIMENTS = {
    "atom-probe": run_atom_probe,
    "polymax-bound": run_polymax_bound,
    "mp-hist": run_mp_hist,
    "crossing-count": run_crossing_count,
    "maxeig-scan": run_maxeig_scan,
    "mineig-scan": run_mineig_scan,
    "bridge-sim": run_bridge_sim,
}


def run_experiment(config: ExperimentConfig) -> ResultTable:
    """Run the experiment named by the config; the wall time is logged and kept on the table."""
    if config.name not in EXPERIMENTS:
        raise ValueError(f"unknown experiment '{config.name}'")
    logger.info(f"Starting {config.name} with {config.trials} trials, N in {config.ns}, seed {config.seed}")
    start = time.perf_counter()
    table = EXPERIMENTS[config.name](config)
    table.wall_time = time.perf_counter() - start
    logger.info(f"Finished {config.name}: {len(table)} rows in {table.wall_time:.2f}s")
    return table


__all__ = ['EXPERIMENTS', 'ExperimentConfig', 'load_experiment_config', 'parse_ns', 'parse_p_range', 'with_overrides',
           'worker_count', 'run_experiment', 'run_trials', 'trial_seed', 'run_atom_probe', 'run_polymax_bound',
           'run_mp_hist', 'run_crossing_count', 'run_maxeig_scan', 'run_mineig_scan', 'run_bridge_sim', 'mean',
           'stderr', 'histogram', 'ecdf', 'ks_statistic']
