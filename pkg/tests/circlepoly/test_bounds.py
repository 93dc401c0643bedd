import math

import numpy as np
import pytest

from vanderspec.circlepoly import CirclePolynomial, deleted_log_products, hadamard_index, lambda1_sandwich, t_p_max
from vanderspec.ensemble import SeedSpec, build_vandermonde, sample_phases
from vanderspec.inverse import row_abs_sums_closed_form, vandermonde_inverse
from vanderspec.spectral import eig_hermitian, gram


def test_deleted_products_of_roots_of_unity():
    n = 7
    P = CirclePolynomial(2.0 * np.pi * np.arange(n) / n)
    # |P'(z_p)| = n at every root of z**n - 1
    assert np.allclose(deleted_log_products(P), math.log(n))


def test_deleted_products_reject_duplicate_roots():
    with pytest.raises(ValueError, match="duplicate roots"):
        deleted_log_products(CirclePolynomial([0.4, 0.4, 1.0]))


def test_lagrange_maximum_of_two_antipodal_roots():
    P = CirclePolynomial([0.0, np.pi])
    # T_0(z) = (z + 1) / 2
    assert t_p_max(P, 0) == pytest.approx(0.0, abs=1e-12)
    assert t_p_max(P, 1) == pytest.approx(0.0, abs=1e-12)


def test_t_p_max_index_range():
    with pytest.raises(ValueError, match="outside 0..1"):
        t_p_max(CirclePolynomial([0.0, 1.0]), 2)


@pytest.mark.parametrize("seed", range(5))
def test_hadamard_index_product_is_at_most_n(seed):
    P = CirclePolynomial.from_phases(sample_phases(10, seed=SeedSpec(seed, stream="hadamard")))
    assert deleted_log_products(P)[hadamard_index(P)] <= math.log(10) + 1e-12


@pytest.mark.parametrize("N", [2, 3, 5, 8])
@pytest.mark.parametrize("seed", range(3))
def test_sandwich_brackets_the_smallest_eigenvalue(N, seed):
    phases = sample_phases(N, seed=SeedSpec(seed, N, "sandwich"))
    log_lambda1 = math.log(eig_hermitian(gram(build_vandermonde(phases, N))).smallest)
    bounds = lambda1_sandwich(CirclePolynomial.from_phases(phases))

    assert bounds.brackets(log_lambda1)
    assert bounds.log_lower <= bounds.log_upper
    assert bounds.log_upper_hadamard <= bounds.log_upper_4n2 + 1e-8


def test_sandwich_of_roots_of_unity():
    n = 6
    bounds = lambda1_sandwich(CirclePolynomial(2.0 * np.pi * np.arange(n) / n))

    # equispaced nodes make V unitary, lambda_1 = 1
    assert bounds.brackets(0.0)
    assert bounds.log_upper_4n2 == pytest.approx(math.log(4.0 * n * n / 4.0))


def test_single_root():
    bounds = lambda1_sandwich(CirclePolynomial([0.3]))
    assert bounds.log_lower == pytest.approx(0.0)
    assert bounds.log_upper == pytest.approx(0.0)
    assert bounds.brackets(0.0)


@pytest.mark.parametrize("N", [3, 5, 8, 12])
@pytest.mark.parametrize("seed", range(4))
def test_lagrange_maxima_sit_between_the_row_sums(N, seed):
    phases = sample_phases(N, seed=SeedSpec(seed, N, "row-sums"))
    P = CirclePolynomial.from_phases(phases)
    log_betas = np.log(row_abs_sums_closed_form(P.roots))

    for p in range(N):
        log_scaled = 0.5 * math.log(N) + t_p_max(P, p)
        assert log_betas[p] - math.log(N) - 1e-9 <= log_scaled <= log_betas[p] + 1e-9


@pytest.mark.parametrize("N", [12, 16, 24, 32])
@pytest.mark.parametrize("seed", range(20))
def test_sandwich_over_many_seeds(N, seed):
    phases = sample_phases(N, seed=SeedSpec(seed, N, "sandwich-wide"))
    # lambda_1 = 1 / ||V^-1||**2
    inverse = vandermonde_inverse(phases.nodes(), normalized=True)
    log_lambda1 = -2.0 * math.log(np.linalg.norm(inverse.entries, 2))
    bounds = lambda1_sandwich(CirclePolynomial.from_phases(phases))

    assert bounds.brackets(log_lambda1, slack=1e-6)
