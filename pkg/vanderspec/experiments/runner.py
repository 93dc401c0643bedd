import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, TypeVar

from vanderspec import __version__
from vanderspec.ensemble.phases import SeedSpec
from vanderspec.experiments.config import ExperimentConfig, worker_count

logger = logging.getLogger(__name__)

T = TypeVar('T')


def trial_seed(config: ExperimentConfig, trial_index: int, N: Optional[int] = None) -> SeedSpec:
    """Per-trial seed hash64(base seed, experiment stream, trial index); N joins the stream of N-scans."""
    stream = config.name if N is None else f"{config.name}/N={N}"
    return SeedSpec(config.seed, trial_index, stream)


def run_trials(trial: Callable[[int], T], count: int, workers: Optional[int] = None) -> List[T]:
    """
    Evaluate trial(0), ..., trial(count - 1) and return the results in trial-index order.

    `trial` must be picklable (a module-level function or a functools.partial of one) when
    more than one worker is used.
    """
    if workers is None:
        workers = worker_count()
    if workers == 1 or count == 1:
        return [trial(index) for index in range(count)]
    logger.debug(f"Running {count} trials on {workers} processes")
    chunksize = max(1, count // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(trial, range(count), chunksize=chunksize))


def base_metadata(config: ExperimentConfig) -> dict:
    """Config echo and code version; wall time stays out so reruns write identical files."""
    metadata = {"experiment": config.name, "code_version": __version__}
    metadata.update(config.to_metadata())
    return metadata
