"""
Polynomials P(z) = prod_q (z - z_q) with all roots on the unit circle, evaluated in the log domain.

On the circle |e^{i phi} - e^{i phi_q}| = 2 |sin((phi - phi_q) / 2)|, so log|P| is a sum of
logs of sines and never forms the (possibly huge or tiny) product.
"""
import logging
import math
from typing import Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from vanderspec.ensemble.phases import PhaseVector

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * np.pi
_COINCIDENT = 1e-15
GRID_FACTOR = 16


class CirclePolynomial:
    """
    Monic polynomial with unit-modulus roots, stored by root angles in [0, 2 pi).
    """

    def __init__(self, angles):
        angles = np.mod(np.asarray(angles, dtype=np.float64).reshape(-1), TWO_PI)
        self.angles = angles

    @classmethod
    def from_phases(cls, phases: PhaseVector) -> 'CirclePolynomial':
        return cls(phases.angles())

    @classmethod
    def from_roots(cls, roots) -> 'CirclePolynomial':
        roots = np.asarray(roots, dtype=np.complex128).reshape(-1)
        if roots.size and np.max(np.abs(np.abs(roots) - 1.0)) > 1e-12:
            raise ValueError("every root must have modulus 1")
        return cls(np.angle(roots))

    @property
    def N(self) -> int:
        return self.angles.size

    @property
    def roots(self) -> np.ndarray:
        return np.exp(1j * self.angles)

    def without(self, p: int) -> 'CirclePolynomial':
        """The deleted polynomial prod_{q != p} (z - z_q)."""
        return CirclePolynomial(np.delete(self.angles, p))

    def rotated(self, phi0: float) -> 'CirclePolynomial':
        return CirclePolynomial(self.angles + phi0)

    def coefficients(self) -> np.ndarray:
        """Monic coefficients, highest power first."""
        return np.poly(self.roots)

    def __repr__(self):
        return f"CirclePolynomial(N={self.N})"

    def __eq__(self, other):
        if not isinstance(other, CirclePolynomial):
            return False
        return np.array_equal(self.angles, other.angles)


def _half_angle_gap(phi, angles):
    """|sin((phi - phi_q) / 2)| with the difference first reduced to [-pi, pi]."""
    delta = np.remainder(np.asarray(phi)[..., None] - angles + np.pi, TWO_PI) - np.pi
    return delta, np.abs(np.sin(delta / 2.0))


def log_abs_poly(P: CirclePolynomial, phi: float) -> float:
    """
    log|P(e^{i phi})| = sum_q log(2 |sin((phi - phi_q) / 2)|), accumulated with math.fsum.

    Returns -inf when phi is within 1e-15 of a root angle.
    """
    if P.N == 0:
        return 0.0
    delta, gap = _half_angle_gap(float(phi), P.angles)
    if np.min(np.abs(delta)) < _COINCIDENT:
        return -math.inf
    return math.fsum(np.log(2.0 * gap))


def log_abs_poly_grid(P: CirclePolynomial, phis) -> np.ndarray:
    """Vectorized log|P(e^{i phi})| over an array of angles (plain summation)."""
    phis = np.asarray(phis, dtype=np.float64)
    if P.N == 0:
        return np.zeros_like(phis)
    delta, gap = _half_angle_gap(phis, P.angles)
    with np.errstate(divide="ignore"):
        logs = np.log(2.0 * gap)
    logs[np.abs(delta) < _COINCIDENT] = -np.inf
    return logs.sum(axis=-1)


def t_n_functional(P: CirclePolynomial, phi: float) -> float:
    """T_N(phi) = (1/sqrt(N)) log|P(e^{i phi})|**2."""
    return 2.0 * log_abs_poly(P, phi) / math.sqrt(P.N)


def circle_grid(points: int) -> np.ndarray:
    return TWO_PI * np.arange(points) / points


def refine_maximum(P: CirclePolynomial, grid: np.ndarray, values: np.ndarray, tol: float) -> Tuple[float, float]:
    """Golden-section refinement of the best grid point of log|P| inside its neighbouring cells."""
    j = int(np.argmax(values))
    best_phi, best = float(grid[j]), float(values[j])
    step = TWO_PI / grid.size
    bracket = (best_phi - step, best_phi, best_phi + step)
    try:
        result = minimize_scalar(lambda phi: -log_abs_poly(P, phi), bracket=bracket, method="golden", tol=tol)
    except ValueError as e:
        logger.warning(f"Golden-section bracket rejected ({e}), keeping the grid maximum")
        return best_phi % TWO_PI, best
    if np.isfinite(result.fun) and -result.fun > best:
        return float(result.x) % TWO_PI, float(-result.fun)
    return best_phi % TWO_PI, best


def max_on_circle(P: CirclePolynomial, grid: int = None, tol: float = 1e-12) -> Tuple[float, float]:
    """
    Maximum of |P| on the unit circle.

    Args:
        P (CirclePolynomial): polynomial
        grid (int): number of equally spaced scan points, at least 8N (default 16N)
        tol (float): golden-section tolerance on the angle

    Returns:
        tuple: (maximizing angle phi*, log max |P|); logmax is >= every grid value
    """
    if P.N == 0:
        return 0.0, 0.0
    if grid is None:
        grid = GRID_FACTOR * P.N
    if grid < 8 * P.N:
        raise ValueError(f"grid must hold at least 8N = {8 * P.N} points, got {grid}")
    phis = circle_grid(grid)
    return refine_maximum(P, phis, log_abs_poly_grid(P, phis), tol)
