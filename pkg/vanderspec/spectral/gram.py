from typing import Tuple, Union

import numpy as np

from vanderspec.ensemble.vandermonde import ComplexMatrix
from vanderspec.spectral.jacobi import HermitianMatrix, Spectrum, spectrum_of

MatrixLike = Union[ComplexMatrix, np.ndarray]


def _array(V: MatrixLike) -> np.ndarray:
    if isinstance(V, ComplexMatrix):
        return V.entries
    return np.asarray(V, dtype=np.complex128)


def gram(V: MatrixLike, outer: bool = False) -> HermitianMatrix:
    """
    V*V (L x L), or VV* when outer is True.
    """
    a = _array(V)
    if outer:
        return HermitianMatrix(a @ a.conj().T)
    return HermitianMatrix(a.conj().T @ a)


def singular_values(V: MatrixLike, method: str = "jacobi") -> Spectrum:
    """Singular values s_i = sqrt(lambda_i(V*V)), ascending; tiny negative eigenvalues are clamped to 0."""
    eigenvalues = spectrum_of(gram(V), method=method).values
    return Spectrum(np.sqrt(np.maximum(eigenvalues, 0.0)))


def matrix_norms(M: MatrixLike, method: str = "jacobi") -> Tuple[float, float]:
    """
    Maximum column abs-sum norm and operator norm of a square matrix.

    The two satisfy colsum / sqrt(N) <= op <= sqrt(N) * colsum. The sharper op <= colsum
    fails in general (a single row of ones has colsum 1 and op sqrt(N)).
    """
    a = _array(M)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix norms need a square matrix, got shape {a.shape}")
    colsum = float(np.abs(a).sum(axis=0).max())
    op = singular_values(a, method=method).largest
    return colsum, op
