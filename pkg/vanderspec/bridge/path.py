"""
Brownian bridge on [0, 2 pi] sampled on the grid psi_j = 2 pi j / M, j = 0..M.
"""
import math
from typing import List

import numpy as np

from vanderspec.ensemble.phases import RandomSource, as_generator

TWO_PI = 2.0 * math.pi
DEFAULT_GRID = 2 ** 20


def _check_grid(M: int):
    if M < 2 or M & (M - 1):
        raise ValueError(f"grid size must be a power of two >= 2, got {M}")


class BridgePath:
    """
    Values W(psi_j) of one bridge realization, W(0) = W(2 pi) = 0.
    """

    def __init__(self, values):
        values = np.array(values, dtype=np.float64).reshape(-1)
        _check_grid(values.size - 1)
        if values[0] != 0.0 or values[-1] != 0.0:
            raise ValueError("a bridge path is pinned to 0 at both ends")
        values.setflags(write=False)
        self.values = values

    @property
    def M(self) -> int:
        return self.values.size - 1

    @property
    def spacing(self) -> float:
        return TWO_PI / self.M

    def grid(self) -> np.ndarray:
        return np.arange(self.M + 1) * self.spacing

    def index_of(self, phi: float) -> int:
        """Nearest grid index of the angle phi, modulo M."""
        return int(round((phi % TWO_PI) / self.spacing)) % self.M

    def __neg__(self):
        return BridgePath(-self.values)

    def __len__(self):
        return self.values.size

    def __repr__(self):
        return f"BridgePath(M={self.M})"

    def __eq__(self, other):
        if not isinstance(other, BridgePath):
            return False
        return np.array_equal(self.values, other.values)


def _pinned(walks: np.ndarray) -> np.ndarray:
    M = walks.shape[-1]
    B = np.concatenate([np.zeros(walks.shape[:-1] + (1,)), np.cumsum(walks, axis=-1)], axis=-1)
    fraction = np.arange(M + 1) / M
    W = B - fraction * B[..., -1:]
    W[..., 0] = 0.0
    W[..., -1] = 0.0
    return W


def sample_bridge(M: int = DEFAULT_GRID, seed: RandomSource = 0) -> BridgePath:
    """
    W(psi) = B(psi) - (psi / 2 pi) B(2 pi) for a Gaussian walk B with step variance 2 pi / M.
    """
    _check_grid(M)
    steps = as_generator(seed).normal(0.0, math.sqrt(TWO_PI / M), size=M)
    return BridgePath(_pinned(steps))


def sample_bridges(M: int, count: int, seed: RandomSource = 0) -> np.ndarray:
    """Batch of `count` bridge paths as a (count, M + 1) array."""
    _check_grid(M)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    steps = as_generator(seed).normal(0.0, math.sqrt(TWO_PI / M), size=(count, M))
    return _pinned(steps)


def shift_bridge(path: BridgePath, phi: float) -> BridgePath:
    """
    W_phi(theta) = W(phi + theta) - W(phi) with wraparound; phi snaps to the nearest grid point.
    """
    j = path.index_of(phi)
    if j == 0:
        return path
    periodic = path.values[:-1]
    shifted = np.roll(periodic, -j) - periodic[j]
    return BridgePath(np.append(shifted, 0.0))


class DyadicPhases:
    """
    Dyadic phases 2 pi q for q in {0} and the odd multiples of 2**-l, l = 1..depth, level by level.
    """

    def __init__(self, depth: int):
        if depth < 0:
            raise ValueError(f"depth must be >= 0, got {depth}")
        self.depth = depth
        fractions: List[float] = [0.0]
        for level in range(1, depth + 1):
            fractions.extend((2 * i + 1) / 2 ** level for i in range(2 ** (level - 1)))
        self.fractions = np.array(fractions)

    @property
    def phases(self) -> np.ndarray:
        return TWO_PI * self.fractions

    def grid_indices(self, M: int) -> np.ndarray:
        """Grid index of every phase on a grid of M points; exact when 2**depth divides M."""
        return np.rint(self.fractions * M).astype(np.int64) % M

    def __len__(self):
        return self.fractions.size

    def __repr__(self):
        return f"DyadicPhases(depth={self.depth}, count={len(self)})"


def dyadic_phases(depth: int = 10) -> np.ndarray:
    return DyadicPhases(depth).phases
