"""
Cycled empirical process of N phases and the truncated log-kernel functionals.

With psi_q = (2 pi theta_q - phi) mod 2 pi and F the empirical distribution of the psi_q,
W_{N,phi}(psi) = sqrt(N) (F(psi) - psi / 2 pi). The centered log-modulus T_N(phi) =
(1/sqrt(N)) sum_q g(psi_q) splits into the part T_{N,eps} carried by [eps, 2 pi - eps]
and the local part Z_{N,eps} carried by the eps-neighbourhood of phi.
"""
import logging
import math

import numpy as np
from scipy.integrate import quad
from scipy.stats import kstwobign

from vanderspec.bridge.functionals import log_kernel
from vanderspec.bridge.path import TWO_PI
from vanderspec.ensemble.phases import PhaseVector
from vanderspec.errors import DomainError, QuadratureError

logger = logging.getLogger(__name__)

QUAD_TOL = 1e-9
_PHASE_GAP = 1e-12


class EmpiricalProcess:
    """
    Right-continuous step function W_{N,phi} of one phase vector.
    """

    def __init__(self, phases: PhaseVector, phi: float = 0.0):
        self.phi = float(phi)
        self.raw = phases.angles()
        self.points = np.sort(np.mod(self.raw - self.phi, TWO_PI))

    @property
    def N(self) -> int:
        return self.points.size

    def __call__(self, psi):
        psi = np.asarray(psi, dtype=np.float64)
        counts = np.searchsorted(self.points, psi, side='right')
        return math.sqrt(self.N) * (counts / self.N - psi / TWO_PI)

    def direct(self, psi):
        """Same process from the unsorted shifted phases by direct counting."""
        psi = np.asarray(psi, dtype=np.float64)
        shifted = np.mod(self.raw - self.phi, TWO_PI)
        counts = np.sum(shifted[:, None] <= psi.reshape(-1)[None, :], axis=0).reshape(psi.shape)
        return math.sqrt(self.N) * (counts / self.N - psi / TWO_PI)

    def cdf(self, psi):
        return np.searchsorted(self.points, np.asarray(psi, dtype=np.float64), side='right') / self.N

    def sup_norm(self) -> float:
        """sup_psi |W_{N,phi}(psi)|, i.e. sqrt(N) times the Kolmogorov-Smirnov statistic."""
        u = self.points / TWO_PI
        i = np.arange(1, self.N + 1)
        d = max(np.max(i / self.N - u), np.max(u - (i - 1) / self.N))
        return math.sqrt(self.N) * float(d)

    def __repr__(self):
        return f"EmpiricalProcess(N={self.N}, phi={self.phi:.6g})"


def kolmogorov_cdf(x):
    """Limit law of sup |W_{N,0}|."""
    return kstwobign.cdf(x)


def _log_correction(psi):
    # g(psi) - 2 log(psi), smooth on [0, 2 pi)
    return 2.0 * np.log(np.sinc(np.asarray(psi) / TWO_PI))


def _quad(func, a: float, b: float, **kwargs) -> float:
    value, error = quad(func, a, b, epsabs=1e-12, epsrel=1e-12, limit=200, **kwargs)
    if error > QUAD_TOL:
        raise QuadratureError(f"quadrature error estimate {error:.2e} exceeds {QUAD_TOL}")
    return value


def _check_eps(eps: float, upper: float = math.pi):
    if not 0.0 < eps <= upper:
        raise DomainError(f"eps must be in (0, {upper:.6g}], got {eps}")


def mu_eps(eps: float) -> float:
    """mu_eps = (1 / pi) int_0^eps g(psi) dpsi."""
    _check_eps(eps)
    log_part = 2.0 * (eps * math.log(eps) - eps)
    return (log_part + _quad(_log_correction, 0.0, eps)) / math.pi


def sigma2_eps(eps: float) -> float:
    """sigma_eps**2 = (1 / pi) int_0^eps g(psi)**2 dpsi - mu_eps**2."""
    _check_eps(eps)
    log_eps = math.log(eps)
    log_squared = eps * log_eps ** 2 - 2.0 * eps * log_eps + 2.0 * eps
    cross = _quad(_log_correction, 0.0, eps, weight='alg-loga', wvar=(0.0, 0.0))
    correction_squared = _quad(lambda psi: _log_correction(psi) ** 2, 0.0, eps)
    second = (4.0 * log_squared + 4.0 * cross + correction_squared) / math.pi
    return second - mu_eps(eps) ** 2


def log_kernel_variance() -> float:
    """Variance of g(psi) for psi uniform on the circle; pi**2 / 3."""
    return sigma2_eps(math.pi)


def _shifted_points(phases: PhaseVector, phi: float, eps: float) -> np.ndarray:
    if not 0.0 < eps < math.pi / 2.0:
        raise DomainError(f"eps must be in (0, pi/2), got {eps}")
    points = np.mod(phases.angles() - phi, TWO_PI)
    gap = np.minimum(points, TWO_PI - points)
    if np.any(gap < _PHASE_GAP):
        raise DomainError(f"phi={phi} lies within {_PHASE_GAP} of a phase")
    return points


def t_n_eps(phases: PhaseVector, phi: float, eps: float) -> float:
    """
    T_{N,eps}(phi) = sqrt(N) [(F - psi/2pi) g]_eps^{2pi-eps} - sqrt(N) int_eps^{2pi-eps} (F - psi/2pi) cot(psi/2) dpsi.

    The F-part of the integral is exact through the antiderivative g; the linear part uses
    adaptive quadrature.
    """
    points = _shifted_points(phases, phi, eps)
    N = points.size
    a, b = eps, TWO_PI - eps
    g_a, g_b = float(log_kernel(a)), float(log_kernel(b))

    F_a = np.count_nonzero(points <= a) / N
    F_b = np.count_nonzero(points <= b) / N
    bracket = (F_b - b / TWO_PI) * g_b - (F_a - a / TWO_PI) * g_a

    inside = points[points <= b]
    empirical_integral = math.fsum(g_b - log_kernel(np.maximum(inside, a))) / N
    linear_integral = _quad(lambda psi: psi / TWO_PI / math.tan(psi / 2.0), a, b)
    return math.sqrt(N) * (bracket - (empirical_integral - linear_integral))


def z_n_eps(phases: PhaseVector, phi: float, eps: float) -> float:
    """Z_{N,eps}(phi) = (1/sqrt(N)) sum over phases within eps of phi of g - sqrt(N) mu_eps."""
    points = _shifted_points(phases, phi, eps)
    N = points.size
    local = points[(points <= eps) | (points > TWO_PI - eps)]
    return math.fsum(log_kernel(local)) / math.sqrt(N) - math.sqrt(N) * mu_eps(eps)
