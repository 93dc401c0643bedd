"""
Balanced point and sign-flip experiment for polynomials whose roots come in diametric pairs.

For pairs (z_i, -z_i) the function Psi(phi) = log|P(e^{i phi})| + log|P(-e^{i phi})| does not
depend on which element of each pair is used as a root, and it integrates to zero over the
circle, so it has a zero w. At w, flipping signs of the roots turns log|P_v(w)|**2 into the
signed sum y = sum_i v_i log(alpha_i / beta_i).
"""
import itertools
import logging
import math
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from vanderspec.circlepoly.polynomial import CirclePolynomial, TWO_PI, log_abs_poly, log_abs_poly_grid, max_on_circle
from vanderspec.ensemble.phases import PhaseVector, RandomSource, SeedSpec, as_generator, sample_phases
from vanderspec.errors import SearchFailureError

logger = logging.getLogger(__name__)

GAMMA = math.log(math.cos(math.pi / 8) / math.sin(math.pi / 8))
BALANCE_GRID_FACTOR = 64
_EXHAUSTIVE_LIMIT = 20


class PairedRoots:
    """
    N diametric pairs (z_i, -z_i) with a current sign vector v; the active roots are v_i z_i.
    """

    def __init__(self, angles, signs=None):
        self.angles = np.mod(np.asarray(angles, dtype=np.float64).reshape(-1), TWO_PI)
        if signs is None:
            signs = np.ones(self.angles.size, dtype=np.int64)
        signs = np.asarray(signs, dtype=np.int64).reshape(-1)
        if signs.size != self.angles.size or not np.all(np.abs(signs) == 1):
            raise ValueError("signs must be a vector of +1/-1 matching the pairs")
        self.signs = signs

    @classmethod
    def from_phases(cls, phases: PhaseVector) -> 'PairedRoots':
        return cls(phases.angles())

    @property
    def N(self) -> int:
        return self.angles.size

    def with_signs(self, signs) -> 'PairedRoots':
        return PairedRoots(self.angles, signs)

    def flipped(self, i: int) -> 'PairedRoots':
        """Same pairs with the first element of pair i replaced by its negation."""
        angles = self.angles.copy()
        angles[i] += np.pi
        return PairedRoots(angles, self.signs)

    def active_polynomial(self) -> CirclePolynomial:
        return CirclePolynomial(self.angles + np.pi * (self.signs < 0))

    def doubled_polynomial(self) -> CirclePolynomial:
        """prod_i (z - z_i)(z + z_i); its log-modulus on the circle is Psi."""
        return CirclePolynomial(np.concatenate([self.angles, self.angles + np.pi]))

    def __repr__(self):
        return f"PairedRoots(N={self.N})"


def balance_function(pairs: PairedRoots, phi: float) -> float:
    """Psi(phi) = log|P(e^{i phi})| + log|P(-e^{i phi})|."""
    return log_abs_poly(pairs.doubled_polynomial(), phi)


def _scan_for_sign_change(doubled: CirclePolynomial, points: int) -> Optional[float]:
    step = TWO_PI / points
    phis = (np.arange(points) + 0.5) * step
    values = log_abs_poly_grid(doubled, phis)
    following = np.roll(values, -1)
    exact = np.flatnonzero(values == 0.0)
    if exact.size:
        return float(phis[exact[0]])
    changes = np.flatnonzero(np.isfinite(values) & np.isfinite(following) & (values * following < 0.0))
    if not changes.size:
        return None
    j = int(changes[0])
    left = phis[j]
    return brentq(lambda phi: log_abs_poly(doubled, phi), left, left + step, xtol=1e-15, maxiter=200) % TWO_PI


def balanced_angle(pairs: PairedRoots, grid_factor: int = BALANCE_GRID_FACTOR) -> float:
    """
    Angle of a balanced point: first sign change of Psi on a grid of grid_factor*N points,
    refined by Brent's method. The grid is refined x4 once before giving up.

    Raises:
        SearchFailureError: if no sign change is found
    """
    doubled = pairs.doubled_polynomial()
    points = grid_factor * max(pairs.N, 1)
    for attempt in range(2):
        phi = _scan_for_sign_change(doubled, points)
        if phi is not None:
            return phi
        logger.warning(f"No sign change of the balance function on {points} points, refining the grid")
        points *= 4
    raise SearchFailureError(f"no balanced point found on {points // 4} grid points")


def find_balanced_point(pairs: PairedRoots) -> complex:
    """Unit-modulus w with |P(w) P(-w)| = 1."""
    return complex(np.exp(1j * balanced_angle(pairs)))


def _log_ratios(pairs: PairedRoots, w: complex) -> np.ndarray:
    """log(alpha_i / beta_i) with alpha_i = |w - z_i| and beta_i = |w + z_i|."""
    half = (np.angle(w) - pairs.angles) / 2.0
    return np.log(np.abs(np.sin(half))) - np.log(np.abs(np.cos(half)))


def sign_flip_sample(pairs: PairedRoots, w: complex, v=None) -> float:
    """y(v) = sum_i v_i log(alpha_i / beta_i); v defaults to the sign vector of pairs."""
    signs = pairs.signs if v is None else np.asarray(v, dtype=np.float64)
    return math.fsum(signs * _log_ratios(pairs, w))


def sign_flip_polynomial_form(pairs: PairedRoots, w: complex, v=None) -> float:
    """log|P_v(w)|**2 = 2 sum_i log|w - v_i z_i|; equals sign_flip_sample at a balanced point."""
    active = pairs if v is None else pairs.with_signs(v)
    return 2.0 * log_abs_poly(active.active_polynomial(), float(np.angle(w)))


def strong_pair_fraction(pairs: PairedRoots, w: complex) -> float:
    """Fraction of pairs with |log(alpha_i / beta_i)| >= gamma."""
    return float(np.mean(np.abs(_log_ratios(pairs, w)) >= GAMMA))


def all_sign_vectors(n: int) -> np.ndarray:
    return np.array(list(itertools.product((1, -1), repeat=n)), dtype=np.float64).reshape(-1, n)


def randpoly_threshold(N: int, eps: float) -> float:
    """gamma sqrt(pi) eps sqrt(N) / 2."""
    return GAMMA * math.sqrt(math.pi) * eps * math.sqrt(N) / 2.0


def main_comb_threshold(N: int, eps: float) -> float:
    """sqrt(gamma pi) eps sqrt(N) / 2."""
    return math.sqrt(GAMMA * math.pi) * eps * math.sqrt(N) / 2.0


def sign_flip_tail_frequency(pairs: PairedRoots, w: complex, eps: float, samples: Optional[int] = None,
                             seed: RandomSource = 0) -> float:
    """
    Frequency of |y(v)| >= gamma sqrt(pi) eps sqrt(N) / 2 over sign vectors v.

    All 2**N vectors are used when samples is None (N <= 20), otherwise `samples` uniform draws.
    """
    ratios = _log_ratios(pairs, w)
    if samples is None:
        if pairs.N > _EXHAUSTIVE_LIMIT:
            raise ValueError(f"exhaustive enumeration limited to N <= {_EXHAUSTIVE_LIMIT}")
        signs = all_sign_vectors(pairs.N)
    else:
        signs = as_generator(seed).choice(np.array([-1.0, 1.0]), size=(samples, pairs.N))
    y = signs @ ratios
    return float(np.mean(np.abs(y) >= randpoly_threshold(pairs.N, eps)))


class RandpolyResult:
    """Per-trial 2 log max|P| and the exceedance frequencies of both threshold variants."""

    def __init__(self, N: int, eps: float, two_logmax):
        self.N = N
        self.eps = eps
        self.two_logmax = np.asarray(two_logmax, dtype=np.float64)
        self.threshold_randpoly = randpoly_threshold(N, eps)
        self.threshold_main_comb = main_comb_threshold(N, eps)

    @property
    def frequency(self) -> float:
        return float(np.mean(self.two_logmax >= self.threshold_randpoly))

    @property
    def frequency_main_comb(self) -> float:
        return float(np.mean(self.two_logmax >= self.threshold_main_comb))

    def __repr__(self):
        return f"RandpolyResult(N={self.N}, eps={self.eps}, frequency={self.frequency:.4f})"


def random_polynomial_two_logmax(N: int, seed: SeedSpec) -> float:
    _, logmax = max_on_circle(CirclePolynomial.from_phases(sample_phases(N, seed=seed)))
    return 2.0 * logmax


def randpoly_experiment(N: int, eps: float, trials: int, seed: int = 0) -> RandpolyResult:
    """
    Fraction of random polynomials (uniform root phases) with 2 log max|P| above the thresholds.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError(f"eps must be in (0, 1), got {eps}")
    values = [random_polynomial_two_logmax(N, SeedSpec(seed, t, "randpoly")) for t in range(trials)]
    result = RandpolyResult(N, eps, values)
    logger.info(f"Random polynomial experiment N={N}, eps={eps}: frequency {result.frequency:.4f} "
                f"(main comb variant {result.frequency_main_comb:.4f})")
    return result
