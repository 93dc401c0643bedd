import math

import numpy as np
import pytest

from vanderspec.circlepoly import CirclePolynomial, log_abs_poly, log_abs_poly_grid, max_on_circle, t_n_functional
from vanderspec.circlepoly.polynomial import circle_grid
from vanderspec.ensemble import SeedSpec, sample_phases


@pytest.fixture
def P():
    return CirclePolynomial.from_phases(sample_phases(12, seed=SeedSpec(31, stream="poly")))


def roots_of_unity(n):
    return CirclePolynomial(2.0 * np.pi * np.arange(n) / n)


def test_log_modulus_matches_the_expanded_polynomial(P):
    coefficients = P.coefficients()
    for phi in (0.1, 1.7, 4.0):
        expected = math.log(abs(np.polyval(coefficients, np.exp(1j * phi))))
        assert log_abs_poly(P, phi) == pytest.approx(expected, abs=1e-9)


def test_grid_evaluation_matches_pointwise(P):
    phis = np.linspace(0.0, 2.0 * np.pi, 37)
    pointwise = [log_abs_poly(P, phi) for phi in phis]
    assert np.allclose(log_abs_poly_grid(P, phis), pointwise, atol=1e-12)


def test_log_modulus_at_a_root():
    P = CirclePolynomial([0.5, 2.0])
    assert log_abs_poly(P, 0.5) == -math.inf
    assert log_abs_poly_grid(P, np.array([2.0, 1.0]))[0] == -np.inf


def test_t_n_functional(P):
    assert t_n_functional(P, 0.3) == pytest.approx(2.0 * log_abs_poly(P, 0.3) / math.sqrt(12))


@pytest.mark.parametrize("n", [1, 5, 16])
def test_maximum_of_z_to_the_n_minus_one(n):
    phi, logmax = max_on_circle(roots_of_unity(n))

    assert logmax == pytest.approx(math.log(2.0), abs=1e-10)
    assert math.cos(n * phi) == pytest.approx(-1.0, abs=1e-8)


def test_maximum_dominates_the_grid(P):
    grid = circle_grid(16 * P.N)
    phi, logmax = max_on_circle(P)

    assert 0.0 <= phi < 2.0 * np.pi
    assert logmax >= log_abs_poly_grid(P, grid).max()
    assert logmax == pytest.approx(log_abs_poly(P, phi))


def test_maximum_is_rotation_invariant():
    clustered = CirclePolynomial(np.linspace(0.0, 1.0, 8))
    _, logmax = max_on_circle(clustered)
    _, rotated = max_on_circle(clustered.rotated(1.234))
    assert rotated == pytest.approx(logmax, abs=1e-8)


def test_maximum_needs_a_fine_grid(P):
    with pytest.raises(ValueError, match="at least 8N"):
        max_on_circle(P, grid=8 * P.N - 1)


def test_empty_polynomial():
    assert max_on_circle(CirclePolynomial([])) == (0.0, 0.0)
    assert log_abs_poly(CirclePolynomial([]), 1.0) == 0.0


class TestCirclePolynomial:

    def test_from_roots(self):
        P = CirclePolynomial.from_roots([1.0, 1j, -1.0])
        assert np.allclose(P.angles, [0.0, np.pi / 2, np.pi])
        assert np.allclose(P.roots, [1.0, 1j, -1.0])

    def test_from_roots_rejects_off_circle_roots(self):
        with pytest.raises(ValueError, match="modulus 1"):
            CirclePolynomial.from_roots([1.0, 0.5])

    def test_without(self):
        P = CirclePolynomial([0.1, 0.2, 0.3])
        assert P.without(1) == CirclePolynomial([0.1, 0.3])
        assert P.without(1).N == 2

    def test_angles_are_reduced(self):
        assert CirclePolynomial([-np.pi / 2]).angles[0] == pytest.approx(1.5 * np.pi)
        assert repr(CirclePolynomial([0.0, 1.0])) == "CirclePolynomial(N=2)"


@pytest.mark.parametrize("N", [2, 6, 12, 20])
@pytest.mark.parametrize("seed", range(3))
def test_maximum_between_coefficient_sums(N, seed):
    P = CirclePolynomial.from_phases(sample_phases(N, seed=SeedSpec(seed, N, "coefficients")))
    log_abs_sum = math.log(np.abs(P.coefficients()).sum())

    _, log_max = max_on_circle(P)
    assert log_abs_sum - math.log(N + 1) - 1e-9 <= log_max <= log_abs_sum + 1e-9
