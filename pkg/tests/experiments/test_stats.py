import math

import numpy as np
import pytest
from scipy.stats import uniform

from vanderspec.errors import DomainError
from vanderspec.experiments import ecdf, histogram, ks_statistic, mean, stderr


def test_mean_and_stderr():
    assert mean([1.0, 2.0, 3.0]) == 2.0
    assert stderr([1.0, 2.0, 3.0]) == pytest.approx(1.0 / math.sqrt(3.0))
    assert stderr([5.0]) == 0.0


@pytest.mark.parametrize("func", [mean, stderr, histogram, ecdf])
def test_empty_sample(func):
    with pytest.raises(DomainError, match="empty sample"):
        func([])


def test_histogram_masses_sum_to_one():
    x = np.random.default_rng(0).normal(size=1000)

    edges, masses = histogram(x)
    assert edges.size == masses.size + 1
    assert masses.sum() == pytest.approx(1.0, abs=1e-12)

    edges, masses = histogram(x, bins=5)
    assert edges.size == 6
    assert masses.sum() == pytest.approx(1.0, abs=1e-12)


def test_histogram_range():
    edges, masses = histogram([0.5, 1.5, 1.6, 3.9], bins=4, value_range=(0.0, 4.0))
    assert edges.tolist() == [0.0, 1.0, 2.0, 3.0, 4.0]
    assert masses.tolist() == [0.25, 0.5, 0.0, 0.25]


def test_ecdf():
    values, cdf = ecdf([3.0, 1.0, 2.0, 2.0])
    assert values.tolist() == [1.0, 2.0, 3.0]
    assert cdf.tolist() == [0.25, 0.75, 1.0]


def test_sample_against_its_own_ecdf():
    x = np.random.default_rng(1).exponential(size=500)
    assert ks_statistic(x, ecdf(x), step=True) == 0.0


def test_step_table_against_another_sample():
    x = [0.1, 0.4, 0.7]
    # F_3 = 1/3 on [0.1, 0.2) where the reference is still 0
    assert ks_statistic(x, ecdf([0.2, 0.3, 0.5, 0.9]), step=True) == pytest.approx(1.0 / 3.0)


def test_single_point_sits_below_the_jump():
    table = (np.array([0.0, 1.0]), np.array([0.0, 1.0]))

    assert ks_statistic([0.9], table) == pytest.approx(0.9)
    assert ks_statistic([0.9], uniform.cdf) == pytest.approx(0.9)


@pytest.mark.parametrize("seed", [3, 4, 5])
def test_table_and_callable_agree(seed):
    x = np.sqrt(np.random.default_rng(seed).uniform(size=200))
    grid = np.linspace(0.0, 1.0, 10_001)

    assert ks_statistic(x, (grid, grid ** 2)) == pytest.approx(ks_statistic(x, np.square), abs=1e-6)


def test_ks_against_a_callable():
    x = np.random.default_rng(2).uniform(size=2000)
    assert ks_statistic(x, uniform.cdf) < 0.05
    assert ks_statistic(x + 0.5, uniform.cdf) > 0.4
