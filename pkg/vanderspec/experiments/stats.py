import math
from typing import Callable, Optional, Tuple, Union

import numpy as np
from scipy.stats import kstest

from vanderspec.errors import DomainError

CdfTable = Tuple[np.ndarray, np.ndarray]


def _sample(x) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    if x.size == 0:
        raise DomainError("empty sample")
    return x


def mean(x) -> float:
    x = _sample(x)
    return math.fsum(x) / x.size


def stderr(x) -> float:
    """Standard error of the mean (sample standard deviation / sqrt(n)); 0 for a single value."""
    x = _sample(x)
    if x.size == 1:
        return 0.0
    return float(np.std(x, ddof=1) / math.sqrt(x.size))


def histogram(x, bins: Optional[int] = None, value_range: Optional[Tuple[float, float]] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Bin edges and bin masses (counts / n, summing to 1).

    Freedman-Diaconis binning unless `bins` is given.
    """
    x = _sample(x)
    counts, edges = np.histogram(x, bins='fd' if bins is None else bins, range=value_range)
    return edges, counts / x.size


def ecdf(x) -> CdfTable:
    """Distinct sample values and the right-continuous empirical CDF at each of them."""
    values, counts = np.unique(_sample(x), return_counts=True)
    return values, np.cumsum(counts) / counts.sum()


def _step_lookup(table_x: np.ndarray, table_f: np.ndarray, t: np.ndarray) -> np.ndarray:
    index = np.searchsorted(table_x, t, side='right') - 1
    return np.where(index >= 0, table_f[np.maximum(index, 0)], 0.0)


def ks_statistic(x, cdf: Union[Callable, CdfTable], step: bool = False) -> float:
    """
    Kolmogorov-Smirnov distance sup_t |F_n(t) - F(t)| of the sample to a CDF given as a callable or as a
    (values, cdf) table.

    A table is linearly interpolated between its values, or read as a right-continuous step function
    when `step` is set (an empirical CDF from `ecdf`). Both sides of every jump are compared.
    """
    x = _sample(x)
    if callable(cdf):
        return float(kstest(x, cdf).statistic)
    table_x, table_f = (np.asarray(part, dtype=np.float64) for part in cdf)
    points = np.sort(x)
    n = points.size
    if step:
        # both functions are right-continuous steps, the supremum sits on a jump of one of them
        t = np.concatenate([points, table_x])
        empirical = np.searchsorted(points, t, side='right') / n
        return float(np.max(np.abs(empirical - _step_lookup(table_x, table_f, t))))
    reference = np.interp(points, table_x, table_f, left=0.0, right=1.0)
    above = np.searchsorted(points, points, side='right') / n
    below = np.searchsorted(points, points, side='left') / n
    return float(max(np.max(above - reference), np.max(reference - below)))
