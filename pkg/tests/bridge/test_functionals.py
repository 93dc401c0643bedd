import logging
import math

import numpy as np
import pytest

from vanderspec.bridge import BridgePath, DyadicPhases, cot_kernel, i_phi, i_phi_all_shifts, i_star, log_kernel, \
    sample_bridge, sample_bridges
from vanderspec.ensemble import SeedSpec
from vanderspec.errors import ResolutionError


@pytest.fixture
def path():
    return sample_bridge(512, seed=SeedSpec(70, stream="functionals"))


def plateau(M, a, b):
    grid = np.arange(M + 1) * 2.0 * math.pi / M
    return BridgePath(np.where((grid >= a) & (grid <= b), 1.0, 0.0))


def test_kernels():
    assert log_kernel(math.pi) == pytest.approx(2.0 * math.log(2.0))
    assert log_kernel(math.pi / 3.0) == pytest.approx(0.0, abs=1e-12)
    assert cot_kernel(math.pi / 2.0) == pytest.approx(1.0)
    assert cot_kernel(math.pi) == pytest.approx(0.0, abs=1e-12)


def test_plateau_has_a_closed_form():
    a, b = 1.0, 2.0
    path = plateau(2 ** 20, a, b)
    expected = math.log(1.0 - math.cos(b)) - math.log(1.0 - math.cos(a))

    assert i_phi(path, 0.0, 0.01) == pytest.approx(expected, abs=1e-4)
    assert i_phi(path, 0.0, 0.01, by_parts=True) == pytest.approx(-expected, abs=1e-4)


def test_raw_integral_is_linear_in_the_path(path):
    assert i_phi(-path, 1.3, 0.1) == pytest.approx(-i_phi(path, 1.3, 0.1))


def test_all_shifts_match_single_shifts(path):
    eps = 0.1
    values = i_phi_all_shifts(path, eps)

    assert values.shape == (512,)
    for j in (0, 1, 100, 256, 511):
        assert values[j] == pytest.approx(i_phi(path, j * path.spacing, eps), abs=1e-9)


def test_i_star_is_the_dyadic_maximum(path):
    eps = 0.05
    indices = DyadicPhases(3).grid_indices(path.M)
    expected = max(i_phi(path, j * path.spacing, eps) for j in indices)
    assert i_star(path, 3, eps) == pytest.approx(expected, abs=1e-9)


def test_i_star_grows_with_depth(path):
    values = [i_star(path, depth, 0.05) for depth in range(0, 7)]
    assert np.all(np.diff(values) >= 0.0)


def test_i_star_warns_beyond_the_grid(caplog):
    path = sample_bridge(8, seed=1)
    with caplog.at_level(logging.WARNING):
        i_star(path, 4, 1.0)
    assert "finer than the grid" in caplog.text


def test_eps_below_the_grid_spacing():
    path = sample_bridge(64, seed=2)
    with pytest.raises(ResolutionError, match="grid spacing"):
        i_phi(path, 0.0, 0.05)


def test_eps_must_stay_below_pi(path):
    with pytest.raises(ValueError, match="< pi"):
        i_phi(path, 0.0, math.pi)


@pytest.mark.parametrize("phi", [0.0, 1.3])
def test_i_phi_is_centered(phi):
    paths = sample_bridges(256, 4000, seed=SeedSpec(71, stream="centered"))
    values = np.array([i_phi(BridgePath(row), phi, 0.05) for row in paths])

    assert abs(values.mean()) <= 4.0 * values.std(ddof=1) / math.sqrt(values.size)
