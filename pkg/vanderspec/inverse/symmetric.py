import numpy as np


class SymmetricFunctions:
    """
    Elementary symmetric functions sigma^m_0 .. sigma^m_{N-1} of the nodes without x_m.

    They are the coefficients of prod_{j != m} (z - x_j) = sum_r (-1)**r sigma^m_r z**(N-1-r).
    """

    def __init__(self, excluded: int, coefficients):
        self.excluded = excluded
        self.coefficients = np.asarray(coefficients, dtype=np.complex128)

    @property
    def N(self) -> int:
        return self.coefficients.size

    def evaluate(self, z):
        """prod_{j != m} (z - x_j) through the coefficient expansion."""
        n = self.N
        signs = (-1.0) ** np.arange(n)
        # np.polyval wants highest power first, which is r = 0
        return np.polyval(signs * self.coefficients, z)

    def abs_sum(self) -> float:
        return float(np.abs(self.coefficients).sum())

    def __repr__(self):
        return f"SymmetricFunctions(excluded={self.excluded}, N={self.N})"


def elem_sym_excluding(x, m: int) -> SymmetricFunctions:
    """
    Expand prod_{j != m} (1 + x_j t) directly over the N-1 remaining nodes.

    Args:
        x: N complex nodes
        m (int): 0-based index of the excluded node
    """
    nodes = np.asarray(x, dtype=np.complex128).reshape(-1)
    n = nodes.size
    if n < 1:
        raise ValueError("at least one node is required")
    if m < 0 or m >= n:
        raise ValueError(f"excluded index {m} outside 0..{n - 1}")
    coefficients = np.zeros(n, dtype=np.complex128)
    coefficients[0] = 1.0
    for j in range(n):
        if j == m:
            continue
        coefficients[1:] = coefficients[1:] + nodes[j] * coefficients[:-1]
    return SymmetricFunctions(m, coefficients)
