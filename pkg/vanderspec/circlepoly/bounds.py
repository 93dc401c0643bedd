import logging
import math

import numpy as np

from vanderspec.circlepoly.polynomial import CirclePolynomial, GRID_FACTOR, TWO_PI, circle_grid, max_on_circle

logger = logging.getLogger(__name__)


class Lambda1Bounds:
    """
    Log-domain bounds on the smallest eigenvalue of V*V for the roots of P.

    Attributes:
        log_lower: -log(N**3 max_p max|T_p|**2)
        log_upper: -log(max_p max|T_p|**2)
        log_upper_4n2: log(4 N**2 / max|P|**2)
        log_upper_hadamard: log(N**2 / max prod_{q != p0} |z - z_q|**2) at the Hadamard index p0
    """

    def __init__(self, log_lower: float, log_upper: float, log_upper_4n2: float, log_upper_hadamard: float):
        self.log_lower = log_lower
        self.log_upper = log_upper
        self.log_upper_4n2 = log_upper_4n2
        self.log_upper_hadamard = log_upper_hadamard

    def brackets(self, log_value: float, slack: float = 1e-8) -> bool:
        return self.log_lower - slack <= log_value <= min(self.log_upper, self.log_upper_4n2) + slack

    def __iter__(self):
        return iter((self.log_lower, self.log_upper, self.log_upper_4n2))

    def __repr__(self):
        return (f"Lambda1Bounds(log_lower={self.log_lower:.6g}, log_upper={self.log_upper:.6g}, "
                f"log_upper_4n2={self.log_upper_4n2:.6g})")


def _pairwise_logs(angles_a, angles_b) -> np.ndarray:
    delta = np.remainder(angles_a[:, None] - angles_b[None, :] + np.pi, TWO_PI) - np.pi
    with np.errstate(divide="ignore"):
        return np.log(2.0 * np.abs(np.sin(delta / 2.0)))


def deleted_log_products(P: CirclePolynomial) -> np.ndarray:
    """sum_{q != p} log|z_p - z_q| for every p."""
    logs = _pairwise_logs(P.angles, P.angles)
    np.fill_diagonal(logs, 0.0)
    products = logs.sum(axis=1)
    if np.any(np.isneginf(products)):
        raise ValueError("polynomial has duplicate roots")
    return products


def t_p_max(P: CirclePolynomial, p: int, grid: int = None, tol: float = 1e-12) -> float:
    """
    log max_{|z|=1} |T_p(z)| with T_p(z) = prod_{q != p} (z - z_q) / |z_p - z_q| (0-based p).
    """
    if p < 0 or p >= P.N:
        raise ValueError(f"root index {p} outside 0..{P.N - 1}")
    if P.N == 1:
        return 0.0
    denominator = deleted_log_products(P)[p]
    if grid is None:
        grid = GRID_FACTOR * P.N
    _, logmax = max_on_circle(P.without(p), grid=grid, tol=tol)
    return logmax - denominator


def hadamard_index(P: CirclePolynomial) -> int:
    """Index p0 minimizing prod_{q != p0} |z_p0 - z_q|; that product is always <= N."""
    products = deleted_log_products(P)
    p0 = int(np.argmin(products))
    logger.debug(f"Hadamard index {p0}: log product {products[p0]:.6g} vs log N {math.log(P.N):.6g}")
    return p0


def _grid_t_p_maxima(P: CirclePolynomial, grid: int) -> np.ndarray:
    phis = circle_grid(grid)
    logs = _pairwise_logs(phis, P.angles)
    singular = np.isneginf(logs)
    finite = np.where(singular, 0.0, logs)
    total = finite.sum(axis=1, keepdims=True)
    hits = singular.sum(axis=1, keepdims=True)
    deleted = total - finite
    deleted[(hits - singular) > 0] = -np.inf
    return deleted.max(axis=0) - deleted_log_products(P)


def lambda1_sandwich(P: CirclePolynomial, grid: int = None, tol: float = 1e-12) -> Lambda1Bounds:
    """
    Bounds 1/(N**3 max|T|**2) <= lambda_1 <= 1/max|T|**2 <= N**2/max|P_p0|**2 <= 4 N**2/max|P|**2, in logs.

    max|T| is taken over all p; every p is scanned on the grid and the best one is refined.
    """
    n = P.N
    if grid is None:
        grid = GRID_FACTOR * n
    if n == 1:
        log_t = 0.0
    else:
        grid_maxima = _grid_t_p_maxima(P, grid)
        best = int(np.argmax(grid_maxima))
        log_t = max(float(grid_maxima[best]), t_p_max(P, best, grid=grid, tol=tol))
    _, log_p = max_on_circle(P, grid=grid, tol=tol)
    p0 = hadamard_index(P) if n > 1 else 0
    _, log_p0 = max_on_circle(P.without(p0), grid=grid, tol=tol)
    log_n = math.log(n)
    return Lambda1Bounds(
        log_lower=-(3.0 * log_n + 2.0 * log_t),
        log_upper=-2.0 * log_t,
        log_upper_4n2=math.log(4.0) + 2.0 * log_n - 2.0 * log_p,
        log_upper_hadamard=2.0 * log_n - 2.0 * log_p0,
    )
