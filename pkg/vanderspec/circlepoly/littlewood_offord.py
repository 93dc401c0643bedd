import itertools
import math
from collections import Counter
from fractions import Fraction

from vanderspec.errors import DomainError


def _ball_size(delta: float) -> int:
    if delta < 0:
        raise DomainError(f"radius must be >= 0, got {delta}")
    return math.floor(delta) + 1


def lo_exact_fraction(n: int, delta: float) -> Fraction:
    """
    Largest probability that a sum of n random +/-1 unit steps lands in a closed ball of radius delta.

    With s = floor(delta) + 1 the answer is 2**-n times the sum of the s largest binomial
    coefficients C(n, j).

    Raises:
        DomainError: if n < s
    """
    s = _ball_size(delta)
    if n < s:
        raise DomainError(f"need n >= s = {s}, got n={n}")
    coefficients = sorted((math.comb(n, j) for j in range(n + 1)), reverse=True)
    return Fraction(sum(coefficients[:s]), 2 ** n)


def lo_exact(n: int, delta: float) -> float:
    return float(lo_exact_fraction(n, delta))


def lo_exhaustive(n: int, delta: float) -> Fraction:
    """Same probability by enumerating all 2**n sign vectors and sliding a window of width 2 delta."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    _ball_size(delta)
    sums = Counter(sum(signs) for signs in itertools.product((-1, 1), repeat=n))
    values = sorted(sums)
    best = 0
    for low in values:
        covered = sum(count for value, count in sums.items() if low <= value <= low + 2 * delta)
        best = max(best, covered)
    return Fraction(best, 2 ** n)
