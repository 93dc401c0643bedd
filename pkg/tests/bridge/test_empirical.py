import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.stats import kstest

from vanderspec.bridge import EmpiricalProcess, kolmogorov_cdf, log_kernel, log_kernel_variance, mu_eps, sigma2_eps, \
    t_n_eps, z_n_eps
from vanderspec.circlepoly import CirclePolynomial, t_n_functional
from vanderspec.ensemble import PhaseVector, SeedSpec, sample_phases
from vanderspec.errors import DomainError


@pytest.fixture
def phases():
    return sample_phases(50, seed=SeedSpec(80, stream="empirical"))


def test_sorted_and_direct_counting_agree(phases):
    process = EmpiricalProcess(phases, phi=0.7)
    psi = np.linspace(0.0, 2.0 * math.pi, 301)

    assert process.N == 50
    assert np.allclose(process(psi), process.direct(psi))


def test_process_vanishes_at_both_ends(phases):
    process = EmpiricalProcess(phases)
    assert process(0.0) == pytest.approx(0.0, abs=1e-12)
    assert process(2.0 * math.pi) == pytest.approx(0.0, abs=1e-12)
    assert process.cdf(2.0 * math.pi) == 1.0


def test_sup_norm_is_the_scaled_ks_statistic(phases):
    process = EmpiricalProcess(phases, phi=1.1)
    statistic = kstest(process.points / (2.0 * math.pi), "uniform").statistic

    assert process.sup_norm() == pytest.approx(math.sqrt(50) * statistic)
    dense = np.linspace(0.0, 2.0 * math.pi, 20_001)
    assert np.max(np.abs(process(dense))) <= process.sup_norm() + 1e-12


@pytest.mark.slow
def test_sup_norm_follows_the_kolmogorov_law():
    sup_norms = [EmpiricalProcess(sample_phases(1000, seed=SeedSpec(81, t))).sup_norm() for t in range(2000)]
    assert kstest(sup_norms, kolmogorov_cdf).statistic <= 0.05


def test_kolmogorov_cdf():
    assert kolmogorov_cdf(1.3581) == pytest.approx(0.95, abs=1e-3)


def test_log_kernel_has_zero_mean_and_known_variance():
    assert mu_eps(math.pi) == pytest.approx(0.0, abs=1e-9)
    assert log_kernel_variance() == pytest.approx(math.pi ** 2 / 3.0, abs=1e-8)


@pytest.mark.parametrize("eps", [0.01, 0.3, 1.5])
def test_truncated_moments_match_direct_quadrature(eps):
    first, _ = quad(lambda psi: float(log_kernel(psi)), 0.0, eps, limit=200)
    second, _ = quad(lambda psi: float(log_kernel(psi)) ** 2, 0.0, eps, limit=200)

    assert mu_eps(eps) == pytest.approx(first / math.pi, abs=1e-7)
    assert sigma2_eps(eps) == pytest.approx(second / math.pi - (first / math.pi) ** 2, abs=1e-6)


@pytest.mark.parametrize("eps", [0.0, -0.1, 3.5])
def test_truncated_moments_domain(eps):
    with pytest.raises(DomainError):
        mu_eps(eps)
    with pytest.raises(DomainError):
        sigma2_eps(eps)


@pytest.mark.parametrize("N", [10, 100])
@pytest.mark.parametrize("eps", [0.05, 0.4])
def test_local_and_far_parts_add_up(N, eps):
    phases = sample_phases(N, seed=SeedSpec(82, N, "decomposition"))
    phi = 1.0
    total = t_n_functional(CirclePolynomial.from_phases(phases), phi)

    assert t_n_eps(phases, phi, eps) + z_n_eps(phases, phi, eps) == pytest.approx(total, abs=1e-6)


def test_local_part_without_nearby_phases():
    phases = PhaseVector([0.5, 0.6])
    assert z_n_eps(phases, 0.0, 0.1) == pytest.approx(-math.sqrt(2) * mu_eps(0.1))


def test_phi_on_a_phase():
    with pytest.raises(DomainError, match="within"):
        t_n_eps(PhaseVector([0.25, 0.6]), math.pi / 2.0, 0.1)


def test_eps_below_a_quarter_turn(phases):
    with pytest.raises(DomainError, match="pi/2"):
        z_n_eps(phases, 0.3, 1.6)


def test_t_n_has_the_log_kernel_variance():
    values = [t_n_functional(CirclePolynomial.from_phases(sample_phases(400, seed=SeedSpec(83, t))), 1.0)
              for t in range(5000)]

    assert abs(np.mean(values)) <= 3.0 * np.std(values, ddof=1) / math.sqrt(5000)
    assert np.var(values, ddof=1) == pytest.approx(math.pi ** 2 / 3.0, rel=0.1)


@pytest.mark.slow
def test_local_part_is_centred_with_the_truncated_variance():
    eps = 0.3
    values = [z_n_eps(sample_phases(400, seed=SeedSpec(84, t)), 1.0, eps) for t in range(5000)]

    assert abs(np.mean(values)) <= 3.0 * np.std(values, ddof=1) / math.sqrt(5000)
    assert np.var(values, ddof=1) == pytest.approx(sigma2_eps(eps), rel=0.1)


def test_single_phase_jumps_once():
    process = EmpiricalProcess(PhaseVector([0.5]))

    assert process(math.pi - 1e-9) == pytest.approx(-0.5)
    assert process(math.pi) == pytest.approx(0.5)
    assert process.cdf(math.pi - 1e-9) == 0.0
