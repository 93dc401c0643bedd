import numpy as np

from vanderspec.ensemble.phases import PhaseVector

_SINGULAR = 1e-12


def dirichlet_kernel(x, N: int):
    """
    D_N(x) = sin(N x / 2) / (N sin(x / 2)), continuously extended at x = 2 pi k.

    Args:
        x: angle or array of angles in radians
        N (int): scale

    Returns:
        float or np.ndarray: values in [-1, 1]
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    x_arr = np.asarray(x, dtype=np.float64)
    half_sin = np.sin(x_arr / 2.0)
    singular = np.abs(half_sin) < _SINGULAR
    with np.errstate(divide="ignore", invalid="ignore"):
        value = np.sin(N * x_arr / 2.0) / (N * half_sin)
    # limit at 2 pi k is cos(N pi k) / cos(pi k) = (-1)**(k (N - 1))
    k = np.rint(x_arr / (2.0 * np.pi))
    limit = np.where(np.mod(k * (N - 1), 2.0) == 0.0, 1.0, -1.0)
    value = np.clip(np.where(singular, limit, value), -1.0, 1.0)
    if np.ndim(x) == 0:
        return float(value)
    return value


def dirichlet_envelope(x, N: int):
    """
    Piecewise bound |D_N(x)| <= 1/k on |x| in [2 pi (k-1)/N, 2 pi k/N), |x| reduced to [0, pi].
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    x_arr = np.asarray(x, dtype=np.float64)
    reduced = np.abs(np.mod(x_arr + np.pi, 2.0 * np.pi) - np.pi)
    k = np.floor(reduced * N / (2.0 * np.pi)) + 1.0
    value = 1.0 / k
    if np.ndim(x) == 0:
        return float(value)
    return value


def build_dirichlet_gram(phases: PhaseVector, N: int) -> np.ndarray:
    """
    Real symmetric L x L matrix A(k, m) = prod_j D_N(2 pi (x_kj - x_mj)).

    It has the same eigenvalues as V*V for the d-fold Vandermonde matrix on the same phases.
    """
    A = np.ones((phases.L, phases.L), dtype=np.float64)
    for j in range(phases.d):
        theta = phases.column(j)
        A *= dirichlet_kernel(2.0 * np.pi * (theta[:, None] - theta[None, :]), N)
    A = 0.5 * (A + A.T)
    np.fill_diagonal(A, 1.0)
    return A
