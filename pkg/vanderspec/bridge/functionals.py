"""
Singular-kernel functionals of a bridge path.

I_phi = int_eps^{2 pi - eps} W_phi(psi) sin(psi) / (1 - cos(psi)) dpsi, with the kernel
sin/(1 - cos) = cot(psi / 2), the derivative of g(psi) = log(2 (1 - cos psi)).
"""
import logging
import math

import numpy as np
from scipy.integrate import trapezoid

from vanderspec.bridge.path import TWO_PI, BridgePath, DyadicPhases, shift_bridge
from vanderspec.errors import ResolutionError

logger = logging.getLogger(__name__)


def log_kernel(psi):
    """g(psi) = log(2 (1 - cos psi)) = 2 log(2 |sin(psi / 2)|)."""
    return 2.0 * np.log(2.0 * np.abs(np.sin(np.asarray(psi) / 2.0)))


def cot_kernel(psi):
    """sin(psi) / (1 - cos(psi))."""
    return 1.0 / np.tan(np.asarray(psi) / 2.0)


def _window(path: BridgePath, eps: float):
    h = path.spacing
    if eps < h * (1.0 - 1e-12):
        raise ResolutionError(f"eps={eps} is below the grid spacing {h}")
    if eps >= math.pi:
        raise ValueError(f"eps must be < pi, got {eps}")
    lo = max(1, math.ceil(eps / h - 1e-9))
    hi = min(path.M - 1, math.floor((TWO_PI - eps) / h + 1e-9))
    return lo, hi


def i_phi(path: BridgePath, phi: float, eps: float, by_parts: bool = False) -> float:
    """
    Truncated I_phi of the shifted path by the trapezoid rule on the grid points in [eps, 2 pi - eps].

    With by_parts=True the integration-by-parts form int g dW_phi is returned instead: the
    Stieltjes sum of g against the path increments over the same window. It equals
    [W_phi g] minus the raw integral, so on paths vanishing near both ends it is the negated
    raw value; both forms have the same law for a bridge.

    Raises:
        ResolutionError: if eps is below the grid spacing
    """
    lo, hi = _window(path, eps)
    shifted = shift_bridge(path, phi).values
    psi = np.arange(lo, hi + 1) * path.spacing
    window = shifted[lo:hi + 1]
    if not by_parts:
        return float(trapezoid(window * cot_kernel(psi), dx=path.spacing))
    g = log_kernel(psi)
    return float(np.sum(0.5 * (g[1:] + g[:-1]) * np.diff(window)))


def _trapezoid_weights(path: BridgePath, eps: float) -> np.ndarray:
    lo, hi = _window(path, eps)
    weights = np.zeros(path.M)
    psi = np.arange(lo, hi + 1) * path.spacing
    weights[lo:hi + 1] = cot_kernel(psi) * path.spacing
    weights[lo] *= 0.5
    weights[hi] *= 0.5
    return weights


def i_phi_all_shifts(path: BridgePath, eps: float) -> np.ndarray:
    """
    Raw I_phi for every grid shift phi_j = 2 pi j / M at once.

    sum_i w_i (W[(j + i) mod M] - W[j]) is a circular cross-correlation of the kernel
    weights with the path minus W[j] sum_i w_i.
    """
    weights = _trapezoid_weights(path, eps)
    periodic = path.values[:-1]
    correlation = np.fft.ifft(np.conj(np.fft.fft(weights)) * np.fft.fft(periodic)).real
    return correlation - periodic * weights.sum()


def i_star(path: BridgePath, depth: int, eps: float) -> float:
    """Maximum of the raw I_phi over the dyadic phases up to the given depth."""
    dyadic = DyadicPhases(depth)
    if 2 ** depth > path.M:
        logger.warning(f"Dyadic depth {depth} is finer than the grid of {path.M} points, phases snap to the grid")
    values = i_phi_all_shifts(path, eps)
    return float(values[dyadic.grid_indices(path.M)].max())
