import numpy as np
import pytest

from vanderspec.ensemble import SeedSpec, build_vandermonde, sample_phases
from vanderspec.spectral import eig_hermitian_lapack, gram, matrix_norms, singular_values


@pytest.fixture
def V():
    return build_vandermonde(sample_phases(12, seed=SeedSpec(1, stream="gram")), 8)


def test_gram_orientation(V):
    inner = gram(V)
    outer = gram(V, outer=True)

    assert inner.order == 12
    assert outer.order == 8
    assert inner.trace() == pytest.approx(outer.trace())
    assert np.allclose(np.diag(inner.entries), 1.0)


def test_singular_values_match_svd(V):
    expected = np.sort(np.linalg.svd(V.entries, compute_uv=False))
    values = singular_values(V).values

    assert values.size == 12
    # the four trailing singular values of an 8 x 12 matrix vanish
    assert np.allclose(values[:4], 0.0, atol=1e-5)
    assert np.allclose(values[4:], expected, atol=1e-7)


def test_norms_of_a_row_of_ones():
    N = 9
    M = np.zeros((N, N))
    M[0, :] = 1.0

    colsum, op = matrix_norms(M)
    assert colsum == pytest.approx(1.0)
    assert op == pytest.approx(np.sqrt(N))


@pytest.mark.parametrize("seed", range(5))
def test_norm_equivalence(seed):
    rng = np.random.default_rng(seed)
    N = 7
    M = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))

    colsum, op = matrix_norms(M, method="lapack")
    assert op == pytest.approx(np.linalg.norm(M, 2))
    assert colsum / np.sqrt(N) <= op + 1e-12
    assert op <= np.sqrt(N) * colsum + 1e-12


def test_norms_need_a_square_matrix(V):
    with pytest.raises(ValueError, match="square matrix"):
        matrix_norms(V)


@pytest.mark.parametrize("N", [8, 32, 128])
def test_wide_matrices_have_an_atom_of_half_their_eigenvalues(N):
    phases = sample_phases(2 * N, seed=SeedSpec(N, stream="atom"))
    eigenvalues = eig_hermitian_lapack(gram(build_vandermonde(phases, N))).values

    assert np.count_nonzero(eigenvalues <= 1e-10) / (2 * N) == 0.5
