"""
Exact counting of S_{rho,N}: tuples (p_1..p_r) in {1..N}**r satisfying, for every block B of rho,

    sum_{i in B} k_{p_i} = sum_{i in B} k_{p_{i+1}}     (indices cyclic modulo r).

The brute force enumerates the leading positions in Python and evaluates the trailing ones as a
numpy grid; the 4-cycle crossing partition has closed forms and a pair-sum table.
"""
import itertools
import logging
import math
from collections import Counter
from typing import List, Sequence

import numpy as np

from vanderspec.ensemble.exponents import ExponentSequence
from vanderspec.errors import BudgetError, SequenceOverflowError
from vanderspec.moments.partitions import SetPartition, enumerate_partitions, four_cycle_partition

logger = logging.getLogger(__name__)

BUDGET_BITS = 40
_GRID_ELEMENTS = 2 ** 21
_INT64_LIMIT = 2 ** 63


class SolutionCount:
    """
    |S_{rho,N}| for one partition, size and exponent sequence.

    Attributes:
        count (int): exact number of solutions
        normalized (float): count / N**(r + 1 - |rho|)
        method (str): 'closed-form', 'pair-sums' or 'brute-force'
    """

    def __init__(self, partition: SetPartition, N: int, kind: str, count: int, method: str):
        self.partition = partition
        self.N = N
        self.kind = kind
        self.count = count
        self.method = method

    @property
    def normalized(self) -> float:
        exponent = self.partition.r + 1 - self.partition.size
        return self.count / self.N ** exponent

    def __repr__(self):
        return (f"SolutionCount({self.partition}, N={self.N}, k={self.kind}, count={self.count}, "
                f"normalized={self.normalized:.6g}, method={self.method})")


def block_equations(rho: SetPartition) -> List[np.ndarray]:
    """Integer coefficient vectors c with sum_i c_i k_{p_i} = 0, trivial equations dropped."""
    equations = []
    for block in rho.blocks:
        coefficients = np.zeros(rho.r, dtype=np.int64)
        for element in block:
            i = element - 1
            coefficients[i] += 1
            coefficients[(i + 1) % rho.r] -= 1
        if np.any(coefficients):
            equations.append(coefficients)
    return equations


def count_four_cycle_pair_sums(k: ExponentSequence, N: int) -> int:
    """sum_s r_k(s)**2 with r_k(s) = #{(a, c) : k_a + k_c = s}, from a table of pairwise sums."""
    values = k.values(N)
    if 2 * values[-1] < _INT64_LIMIT:
        arr = np.array(values, dtype=np.int64)
        _, counts = np.unique((arr[:, None] + arr[None, :]).ravel(), return_counts=True)
        return int(np.sum(counts.astype(np.int64) ** 2))
    sums = Counter(a + c for a in values for c in values)
    return sum(count * count for count in sums.values())


def _four_cycle_closed_form(kind: str, N: int) -> int:
    if kind == "linear":
        # sum_s (N - |s - (N + 1)|)**2
        return N * (2 * N * N + 1) // 3
    return 2 * N * N - N


def _grid_dimensions(r: int, N: int) -> int:
    dims = 1
    while dims < r and N ** (dims + 1) <= _GRID_ELEMENTS:
        dims += 1
    return dims


def _brute_force(rho: SetPartition, N: int, k: ExponentSequence) -> int:
    r = rho.r
    values = k.values(N)
    if r * values[-1] >= _INT64_LIMIT:
        raise SequenceOverflowError(f"{k.kind} exponents overflow 64-bit sums at N={N}")
    kv = np.array(values, dtype=np.int64)
    equations = block_equations(rho)

    dims = _grid_dimensions(r, N)
    n_prefix = r - dims
    grid_shape = (N,) * dims
    axes = []
    for axis in range(dims):
        shape = [1] * dims
        shape[axis] = N
        axes.append(kv.reshape(shape))

    grid_parts, prefix_coefficients, pure_prefix = [], [], []
    for c in equations:
        grid_c = c[n_prefix:]
        if not np.any(grid_c):
            pure_prefix.append(c[:n_prefix])
            continue
        part = sum(int(grid_c[a]) * axes[a] for a in range(dims) if grid_c[a])
        grid_parts.append(part)
        prefix_coefficients.append(c[:n_prefix])

    total = 0
    for prefix in itertools.product(range(N), repeat=n_prefix):
        prefix_k = kv[list(prefix)] if n_prefix else np.zeros(0, dtype=np.int64)
        if any(int(np.dot(c, prefix_k)) != 0 for c in pure_prefix):
            continue
        mask = None
        for part, c in zip(grid_parts, prefix_coefficients):
            satisfied = part == -int(np.dot(c, prefix_k))
            mask = satisfied if mask is None else mask & satisfied
        if mask is None:
            total += N ** dims
        else:
            total += int(np.count_nonzero(np.broadcast_to(mask, grid_shape)))
    return total


def count_solutions(rho: SetPartition, N: int, k: ExponentSequence, method: str = "auto") -> SolutionCount:
    """
    Exact |S_{rho,N}|.

    Args:
        rho (SetPartition): partition of {1..r}
        N (int): size
        k (ExponentSequence): exponents
        method (str): 'auto' uses the 4-cycle fast paths when they apply, 'brute' forces enumeration

    Raises:
        BudgetError: when brute force is needed and r log2(N) > 40
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if method not in ("auto", "brute"):
        raise ValueError(f"unknown counting method '{method}'")
    if method == "auto" and rho == four_cycle_partition():
        if k.kind in ("linear", "pow2"):
            return SolutionCount(rho, N, k.kind, _four_cycle_closed_form(k.kind, N), "closed-form")
        return SolutionCount(rho, N, k.kind, count_four_cycle_pair_sums(k, N), "pair-sums")
    if rho.r * math.log2(N) > BUDGET_BITS:
        raise BudgetError(f"brute force over {N}**{rho.r} tuples exceeds the 2**{BUDGET_BITS} budget")
    count = _brute_force(rho, N, k)
    logger.debug(f"Counted {count} solutions for {rho} at N={N} ({k.kind})")
    return SolutionCount(rho, N, k.kind, count, "brute-force")


def k_rho_estimate(rho: SetPartition, k: ExponentSequence, Ns: Sequence[int]) -> List[float]:
    """Finite-N sequence |S_{rho,N}| / N**(r + 1 - |rho|); no extrapolation."""
    return [count_solutions(rho, N, k).normalized for N in Ns]


def asymptotic_moment(r: int, k: ExponentSequence, N: int) -> float:
    """Finite-N proxy of m_r: sum over all partitions of {1..r} of the normalized counts."""
    if r < 1 or r > 5:
        raise ValueError(f"r must be in 1..5 for brute-force counting, got {r}")
    return math.fsum(count_solutions(rho, N, k).normalized for rho in enumerate_partitions(r))
