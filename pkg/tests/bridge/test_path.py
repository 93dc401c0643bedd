import math

import numpy as np
import pytest

from vanderspec.bridge import BridgePath, DyadicPhases, dyadic_phases, sample_bridge, sample_bridges, shift_bridge
from vanderspec.ensemble import SeedSpec


@pytest.fixture
def path():
    return sample_bridge(256, seed=SeedSpec(60, stream="bridge"))


def test_bridge_is_pinned(path):
    assert path.M == 256
    assert len(path) == 257
    assert path.values[0] == 0.0
    assert path.values[-1] == 0.0
    assert path.spacing == pytest.approx(2.0 * math.pi / 256)
    assert path.grid()[-1] == pytest.approx(2.0 * math.pi)


def test_bridge_values_are_read_only(path):
    with pytest.raises(ValueError):
        path.values[3] = 1.0


def test_bridge_covariance():
    paths = sample_bridges(256, 20_000, seed=SeedSpec(61))

    assert paths.shape == (20_000, 257)
    assert np.all(paths[:, 0] == 0.0) and np.all(paths[:, -1] == 0.0)
    # Var W(psi) = psi (2 pi - psi) / (2 pi)
    assert np.var(paths[:, 128], ddof=1) == pytest.approx(math.pi / 2.0, rel=0.05)
    assert np.var(paths[:, 64], ddof=1) == pytest.approx(3.0 * math.pi / 8.0, rel=0.05)
    assert np.var(paths[:, 192], ddof=1) == pytest.approx(3.0 * math.pi / 8.0, rel=0.05)
    # Cov(W(s), W(t)) = s (2 pi - t) / (2 pi) for s <= t
    assert np.cov(paths[:, 64], paths[:, 128])[0, 1] == pytest.approx(math.pi / 4.0, rel=0.05)


def test_single_and_batched_sampling_agree():
    single = sample_bridge(64, seed=SeedSpec(62))
    batch = sample_bridges(64, 1, seed=SeedSpec(62))
    assert np.allclose(single.values, batch[0])


@pytest.mark.parametrize("M", [0, 1, 100])
def test_grid_must_be_a_power_of_two(M):
    with pytest.raises(ValueError, match="power of two"):
        sample_bridge(M)


def test_batch_count():
    with pytest.raises(ValueError, match="count must be >= 1"):
        sample_bridges(8, 0)


def test_path_must_be_pinned():
    with pytest.raises(ValueError, match="pinned"):
        BridgePath([0.0, 1.0, 0.5])
    with pytest.raises(ValueError, match="power of two"):
        BridgePath([0.0, 1.0, 2.0, 0.0])


def test_index_of(path):
    assert path.index_of(0.0) == 0
    assert path.index_of(2.0 * math.pi) == 0
    assert path.index_of(3.4 * path.spacing) == 3
    assert path.index_of(-path.spacing) == 255


def test_shift_by_zero_is_the_same_path(path):
    assert shift_bridge(path, 0.0) is path


def test_shifted_path(path):
    j = 40
    shifted = shift_bridge(path, j * path.spacing)

    assert shifted.values[0] == 0.0
    assert shifted.values[-1] == 0.0
    assert shifted.values[10] == path.values[50] - path.values[40]
    assert shifted.values[230] == path.values[(230 + j) % 256] - path.values[40]


def test_shifting_back_recovers_the_path(path):
    phi = 77 * path.spacing
    restored = shift_bridge(shift_bridge(path, phi), 2.0 * math.pi - phi)
    assert np.allclose(restored.values, path.values, atol=1e-12)


def test_negation(path):
    assert np.array_equal((-path).values, -path.values)
    assert -(-path) == path


class TestDyadicPhases:

    def test_level_order(self):
        dyadic = DyadicPhases(2)
        assert dyadic.fractions.tolist() == [0.0, 0.5, 0.25, 0.75]
        assert dyadic.grid_indices(8).tolist() == [0, 4, 2, 6]
        assert repr(dyadic) == "DyadicPhases(depth=2, count=4)"

    @pytest.mark.parametrize("depth", [0, 1, 6, 10])
    def test_count(self, depth):
        assert len(DyadicPhases(depth)) == 2 ** depth

    def test_default_depth(self):
        phases = dyadic_phases()
        assert phases.size == 1024
        assert np.unique(phases).size == 1024
        assert phases.max() < 2.0 * math.pi

    def test_negative_depth(self):
        with pytest.raises(ValueError, match="depth must be >= 0"):
            DyadicPhases(-1)
