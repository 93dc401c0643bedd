"""
Cyclic-by-row Jacobi eigensolver for complex Hermitian matrices.

Each rotation first removes the phase of H(p, q) with a diagonal unitary and then
applies the real symmetric Jacobi rotation to the resulting real 2x2 block.
"""
import logging
from typing import Tuple, Union

import numpy as np
import scipy.linalg

from vanderspec.errors import ConvergenceError

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 30


class HermitianMatrix:
    """
    Complex Hermitian matrix stored so that H(i, j) == conj(H(j, i)) exactly.

    The constructor checks the input is Hermitian up to `check_tol` (relative to its
    largest entry) and then symmetrizes it.
    """

    def __init__(self, entries, check_tol: float = 1e-10):
        entries = np.asarray(entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(f"a Hermitian matrix must be square, got shape {entries.shape}")
        scale = max(np.abs(entries).max(initial=0.0), 1.0)
        if np.abs(entries - entries.conj().T).max(initial=0.0) > check_tol * scale:
            raise ValueError("matrix is not Hermitian")
        self.entries = 0.5 * (entries + entries.conj().T)

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def trace(self) -> float:
        return float(np.real(np.trace(self.entries)))

    def frobenius(self) -> float:
        return float(np.linalg.norm(self.entries))

    def __repr__(self):
        return f"HermitianMatrix(order={self.order})"


class Spectrum:
    """Eigenvalues sorted in ascending order."""

    def __init__(self, values):
        self.values = np.sort(np.asarray(values, dtype=np.float64))

    @property
    def size(self) -> int:
        return self.values.size

    @property
    def smallest(self) -> float:
        return float(self.values[0])

    @property
    def largest(self) -> float:
        return float(self.values[-1])

    def is_gram(self, tol: float = 1e-9) -> bool:
        return bool(np.all(self.values >= -tol))

    def count_below(self, threshold: float) -> int:
        return int(np.searchsorted(self.values, threshold, side="right"))

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"Spectrum(size={self.size}, min={self.smallest:.6g}, max={self.largest:.6g})"


def _off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a: np.ndarray, q_mat, p: int, q: int) -> None:
    b = a[p, q]
    magnitude = abs(b)
    if magnitude == 0.0:
        return
    phase = b / magnitude
    app = a[p, p].real
    aqq = a[q, q].real
    theta = (aqq - app) / (2.0 * magnitude)
    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    # columns: A <- A J with J = [[c, s], [-s conj(e), c conj(e)]]
    col_p = a[:, p].copy()
    col_q = a[:, q]
    a[:, p] = c * col_p - s * np.conj(phase) * col_q
    a[:, q] = s * col_p + c * np.conj(phase) * col_q
    # rows: A <- J^H A
    row_p = a[p, :].copy()
    row_q = a[q, :]
    a[p, :] = c * row_p - s * phase * row_q
    a[q, :] = s * row_p + c * phase * row_q

    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = app - t * magnitude
    a[q, q] = aqq + t * magnitude

    if q_mat is not None:
        vec_p = q_mat[:, p].copy()
        vec_q = q_mat[:, q]
        q_mat[:, p] = c * vec_p - s * np.conj(phase) * vec_q
        q_mat[:, q] = s * vec_p + c * np.conj(phase) * vec_q


def eig_hermitian(H: HermitianMatrix, tol: float = DEFAULT_TOL, vectors: bool = False,
                  max_sweeps: int = MAX_SWEEPS) -> Union[Spectrum, Tuple[Spectrum, np.ndarray]]:
    """
    Eigenvalues (and optionally eigenvectors) of a Hermitian matrix by cyclic Jacobi sweeps.

    Args:
        H (HermitianMatrix): matrix to diagonalize
        tol (float): stop when the off-diagonal Frobenius norm is <= tol * ||H||_F
        vectors (bool): also return the unitary Q with H = Q diag(values) Q*
        max_sweeps (int): sweep budget

    Returns:
        Spectrum, or (Spectrum, Q) when vectors is True; columns of Q follow the ascending values

    Raises:
        ConvergenceError: if the residual is still above tolerance after max_sweeps
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    a = H.entries.copy()
    n = a.shape[0]
    q_mat = np.eye(n, dtype=np.complex128) if vectors else None
    target = tol * H.frobenius()

    residual = _off_diagonal_norm(a)
    sweeps = 0
    while residual > target:
        if sweeps == max_sweeps:
            raise ConvergenceError(residual, sweeps)
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, q_mat, p, q)
        sweeps += 1
        residual = _off_diagonal_norm(a)
        logger.debug(f"Jacobi sweep {sweeps}: off-diagonal residual {residual:.3e}")

    values = np.real(np.diag(a))
    order = np.argsort(values, kind="stable")
    spectrum = Spectrum(values[order])
    if vectors:
        return spectrum, q_mat[:, order]
    return spectrum


def eig_hermitian_lapack(H: HermitianMatrix) -> Spectrum:
    """LAPACK eigenvalues (scipy) as a Spectrum, for orders where Jacobi sweeps are too slow."""
    return Spectrum(scipy.linalg.eigvalsh(H.entries))


def spectrum_of(H: HermitianMatrix, method: str = "jacobi") -> Spectrum:
    if method == "jacobi":
        return eig_hermitian(H)
    if method == "lapack":
        return eig_hermitian_lapack(H)
    raise ValueError(f"unknown eigensolver '{method}', expected jacobi or lapack")
