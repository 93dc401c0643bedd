import math
from typing import Sequence, Tuple

import numpy as np
from scipy.integrate import quad

from vanderspec.ensemble.phases import RandomSource, as_generator
from vanderspec.ensemble.vandermonde import ComplexMatrix
from vanderspec.errors import QuadratureError
from vanderspec.spectral.gram import gram

MP_EDGE = 4.0
FOUR_CYCLE_LINEAR_K = 2.0 / 3.0
_QUAD_TOL = 1e-10


def empirical_moment(V: ComplexMatrix, r: int) -> float:
    """tr_N((VV*)**r) = (1/N) trace of the r-th power of the outer Gram matrix."""
    if V.rows != V.cols:
        raise ValueError(f"empirical moments need a square matrix, got {V.rows}x{V.cols}")
    if r < 0:
        raise ValueError(f"moment order must be >= 0, got {r}")
    X = gram(V, outer=True).entries
    return float(np.real(np.trace(np.linalg.matrix_power(X, r)))) / V.rows


def mp_density(x):
    """
    Marchenko-Pastur density (ratio 1) sqrt((4 - x) / x) / (2 pi) on (0, 4], zero elsewhere.
    """
    x = np.asarray(x, dtype=np.float64)
    inside = (x > 0.0) & (x <= MP_EDGE)
    safe = np.where(inside, x, 1.0)
    value = np.where(inside, np.sqrt((MP_EDGE - safe) / safe) / (2.0 * math.pi), 0.0)
    return float(value) if value.ndim == 0 else value


def _checked_quad(func, a: float, b: float, **kwargs) -> float:
    value, error = quad(func, a, b, epsabs=_QUAD_TOL, epsrel=_QUAD_TOL, limit=200, **kwargs)
    if error > 1e-8 * max(1.0, abs(value)):
        raise QuadratureError(f"quadrature error estimate {error:.2e} on [{a}, {b}]")
    return value


def mp_moment(r: int) -> float:
    """r-th moment of the Marchenko-Pastur law by algebraic-weight quadrature; equals Catalan(r)."""
    if r < 0 or r > 10:
        raise ValueError(f"moment order must be in 0..10, got {r}")
    return _checked_quad(lambda x: x ** r / (2.0 * math.pi), 0.0, MP_EDGE, weight='alg', wvar=(-0.5, 0.5))


def mp_cdf(x: float) -> float:
    """(4 arcsin(sqrt(x) / 2) + sqrt(x (4 - x))) / (2 pi) on [0, 4]."""
    if x <= 0.0:
        return 0.0
    if x >= MP_EDGE:
        return 1.0
    return (4.0 * math.asin(math.sqrt(x) / 2.0) + math.sqrt(x * (MP_EDGE - x))) / (2.0 * math.pi)


def mp_bin_masses(edges: Sequence[float]) -> np.ndarray:
    """Marchenko-Pastur mass of each histogram bin [edges[i], edges[i+1])."""
    return np.diff([mp_cdf(float(edge)) for edge in edges])


def polytope_volume(samples: int = 1_000_000, seed: RandomSource = 0, lower: float = 0.0,
                    upper: float = 1.0) -> Tuple[float, float]:
    """
    Monte Carlo volume of {(x, y, z) in [0, 1]**3 : lower <= x + y - z <= upper}.

    The defaults give K_rho of the 4-cycle partition under k_p = p - 1 (exactly 2/3).
    Pass lower=-inf, upper=inf for the unconstrained cube.

    Returns:
        (estimate, standard error)
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    u = as_generator(seed).random((samples, 3))
    s = u[:, 0] + u[:, 1] - u[:, 2]
    hit = np.mean((s >= lower) & (s <= upper))
    return float(hit), float(math.sqrt(hit * (1.0 - hit) / samples))
