import numpy as np
import pytest

from vanderspec.inverse import elem_sym_excluding


def test_three_nodes():
    sigma = elem_sym_excluding([2.0, 3.0, 5.0], 0)

    # (1 + 3t)(1 + 5t) = 1 + 8t + 15t**2
    assert np.allclose(sigma.coefficients, [1.0, 8.0, 15.0])
    assert sigma.excluded == 0
    assert sigma.N == 3
    assert sigma.abs_sum() == pytest.approx(24.0)
    assert repr(sigma) == "SymmetricFunctions(excluded=0, N=3)"


@pytest.mark.parametrize("m", [0, 3, 6])
def test_expansion_matches_the_product(m):
    rng = np.random.default_rng(m)
    x = np.exp(2j * np.pi * rng.random(7))
    sigma = elem_sym_excluding(x, m)
    others = np.delete(x, m)

    for z in (0.3 + 0.2j, -1.1, 2j):
        assert sigma.evaluate(z) == pytest.approx(np.prod(z - others))


def test_single_node():
    sigma = elem_sym_excluding([1j], 0)
    assert np.allclose(sigma.coefficients, [1.0])


@pytest.mark.parametrize("m", [-1, 3])
def test_excluded_index_out_of_range(m):
    with pytest.raises(ValueError, match="outside 0..2"):
        elem_sym_excluding([1.0, 2.0, 3.0], m)
