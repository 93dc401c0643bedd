import logging
from typing import Sequence

import numpy as np

from vanderspec.ensemble.exponents import ExponentSequence, reduce_exponent_phases
from vanderspec.ensemble.phases import PhaseVector
from vanderspec.errors import IndexOutOfRangeError

logger = logging.getLogger(__name__)


class ComplexMatrix:
    """
    Dense complex matrix produced by the ensemble constructors.

    Attributes:
        entries (np.ndarray): rows x cols complex array
        normalization (float): the scalar every entry magnitude equals (N**(-d/2))
    """

    def __init__(self, entries, normalization: float = 1.0):
        entries = np.asarray(entries, dtype=np.complex128)
        if entries.ndim != 2:
            raise ValueError(f"a matrix needs two dimensions, got shape {entries.shape}")
        self.entries = entries
        self.normalization = float(normalization)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def __repr__(self):
        return f"ComplexMatrix({self.rows}x{self.cols}, normalization={self.normalization:.6g})"

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return False
        return self.normalization == other.normalization and np.array_equal(self.entries, other.entries)


def gamma_index(ell: Sequence[int], N: int, d: int = None) -> int:
    """
    Row index of the multi-index ell: sum_j N**j * ell_j (j from 0).

    Raises:
        IndexOutOfRangeError: if a component is outside {0, ..., N-1}
    """
    if d is None:
        d = len(ell)
    if len(ell) != d:
        raise IndexOutOfRangeError(f"multi-index has {len(ell)} components, expected {d}")
    index = 0
    for j, component in enumerate(ell):
        if component < 0 or component >= N:
            raise IndexOutOfRangeError(f"component {j} = {component} outside 0..{N - 1}")
        index += N ** j * int(component)
    return index


def _unit_phase_matrix(fractions: np.ndarray, scale: float) -> np.ndarray:
    return np.exp(2j * np.pi * fractions) * scale


def _column_fractions(phases: PhaseVector, j: int, exponents: Sequence[int]) -> np.ndarray:
    words = phases.words[:, j] if phases.high_resolution else None
    return reduce_exponent_phases(phases.column(j), exponents, words=words, bits=phases.bits)


def build_vandermonde(phases: PhaseVector, N: int) -> ComplexMatrix:
    """
    The N**d x L matrix with entries N**(-d/2) exp(2 pi i <ell, x_q>), rows ordered by gamma_index.

    For d = 1 this is the classical matrix with rows z_q**0, ..., z_q**(N-1).
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    d = phases.d
    rows = np.arange(N ** d)
    fractions = None
    for j in range(d):
        digit = (rows // N ** j) % N
        # per-digit reduction, then look up each row's digit
        reduced = _column_fractions(phases, j, list(range(N)))[digit]
        fractions = reduced if fractions is None else fractions + reduced
    if d > 1:
        fractions = np.mod(fractions, 1.0)
    normalization = float(N) ** (-d / 2.0)
    return ComplexMatrix(_unit_phase_matrix(fractions, normalization), normalization)


def build_generalized(phases: PhaseVector, k: ExponentSequence, N: int) -> ComplexMatrix:
    """
    N x N matrix V(p, q) = z_q**k_p / sqrt(N).

    With high-resolution phases the reduction k_p * theta_q mod 1 is exact for any
    exponent size; with plain float phases rows whose exponent exceeds the mantissa
    degenerate (a warning is logged).

    Raises:
        SequenceExhaustedError: if an explicit sequence is shorter than N
    """
    if phases.d != 1 or phases.L != N:
        raise ValueError(f"generalized matrices need d=1 and L=N={N}, got {phases}")
    exponents = k.values(N)
    fractions = _column_fractions(phases, 0, exponents)
    normalization = float(N) ** -0.5
    return ComplexMatrix(_unit_phase_matrix(fractions, normalization), normalization)
