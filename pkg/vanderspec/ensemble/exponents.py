import logging
from typing import List, Optional, Sequence

import numpy as np

from vanderspec.errors import SequenceExhaustedError, SequenceOverflowError

logger = logging.getLogger(__name__)

_INT64_LIMIT = 2 ** 63
_MANTISSA_BITS = 53


class ExponentSequence:
    """
    Strictly increasing nonnegative integer exponents k_1 < k_2 < ... used as row powers
    of a generalized Vandermonde matrix.

    Kinds: 'linear' (k_p = p - 1), 'pow2' (k_p = 2**p), 'square' (k_p = p**2) and
    'explicit' (a user list).
    """
    KINDS = ("linear", "pow2", "square", "explicit")

    def __init__(self, kind: str, values: Optional[Sequence[int]] = None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown exponent sequence kind '{kind}', expected one of {self.KINDS}")
        if kind == "explicit":
            if values is None:
                raise ValueError("explicit sequences need their values")
            values = [int(v) for v in values]
            if any(v < 0 for v in values):
                raise ValueError("exponents must be nonnegative")
            if any(b <= a for a, b in zip(values, values[1:])):
                raise ValueError("exponents must be strictly increasing")
        elif values is not None:
            raise ValueError(f"'{kind}' sequences are generated, do not pass values")
        self.kind = kind
        self._explicit = values

    @classmethod
    def linear(cls) -> 'ExponentSequence':
        return cls("linear")

    @classmethod
    def pow2(cls) -> 'ExponentSequence':
        return cls("pow2")

    @classmethod
    def square(cls) -> 'ExponentSequence':
        return cls("square")

    @classmethod
    def explicit(cls, values: Sequence[int]) -> 'ExponentSequence':
        return cls("explicit", values)

    @classmethod
    def from_name(cls, name: str) -> 'ExponentSequence':
        if name not in ("linear", "pow2", "square"):
            raise ValueError(f"unknown exponent sequence '{name}', expected linear, pow2 or square")
        return cls(name)

    def value(self, p: int) -> int:
        """k_p for the 1-based position p."""
        if p < 1:
            raise ValueError(f"sequence positions start at 1, got {p}")
        if self.kind == "linear":
            return p - 1
        if self.kind == "pow2":
            return 2 ** p
        if self.kind == "square":
            return p * p
        if p > len(self._explicit):
            raise SequenceExhaustedError(f"explicit sequence has {len(self._explicit)} values, position {p} requested")
        return self._explicit[p - 1]

    def values(self, N: int) -> List[int]:
        """The first N exponents as exact Python integers."""
        if N < 1:
            raise ValueError(f"N must be >= 1, got {N}")
        if self.kind == "explicit" and N > len(self._explicit):
            raise SequenceExhaustedError(f"explicit sequence has {len(self._explicit)} values, {N} requested")
        return [self.value(p) for p in range(1, N + 1)]

    def exact_array(self, N: int) -> np.ndarray:
        """The first N exponents as int64; refuses values outside exact-integer mode."""
        values = self.values(N)
        if values[-1] >= _INT64_LIMIT:
            raise SequenceOverflowError(f"{self.kind} exponents exceed 64-bit integers for N={N}")
        return np.array(values, dtype=np.int64)

    def required_bits(self, N: int) -> int:
        """Phase resolution keeping a full mantissa after multiplying by k_N."""
        return max(self.values(N)[-1].bit_length(), 1) + _MANTISSA_BITS

    def __repr__(self):
        if self.kind == "explicit":
            return f"ExponentSequence(explicit, {len(self._explicit)} values)"
        return f"ExponentSequence({self.kind})"

    def __eq__(self, other):
        if not isinstance(other, ExponentSequence):
            return False
        return self.kind == other.kind and self._explicit == other._explicit


def reduce_exponent_phases(theta: np.ndarray, exponents: Sequence[int], words: Optional[np.ndarray] = None,
                           bits: Optional[int] = None) -> np.ndarray:
    """
    Fractional parts (k * theta) mod 1 for every exponent k (rows) and phase theta (columns).

    Fixed point words reduce exactly: (k * word) mod 2**bits. Without words, exponents in
    64-bit range use an extended precision product, larger ones the exact rational value
    of the float phase.
    """
    theta = np.asarray(theta, dtype=np.float64)
    out = np.empty((len(exponents), theta.size), dtype=np.float64)

    if words is not None:
        modulus = 1 << bits
        shift = bits - _MANTISSA_BITS
        scale = 2.0 ** -_MANTISSA_BITS
        words = np.asarray(words, dtype=object)
        for row, k in enumerate(exponents):
            reduced = (words * int(k)) % modulus
            out[row] = np.array([int(w) >> shift for w in reduced], dtype=np.float64) * scale
        return out

    if exponents and max(exponents).bit_length() > _MANTISSA_BITS + 8:
        logger.warning(f"Exponent k={max(exponents)} exceeds the {_MANTISSA_BITS}-bit phase resolution; "
                       f"draw high-resolution phases to avoid degenerate rows")
    theta_ld = theta.astype(np.longdouble)
    ratios = None
    for row, k in enumerate(exponents):
        if k < _INT64_LIMIT:
            out[row] = np.mod(np.longdouble(k) * theta_ld, 1).astype(np.float64)
        else:
            if ratios is None:
                ratios = [t.as_integer_ratio() for t in theta.tolist()]
            out[row] = [(k * num % den) / den for num, den in ratios]
    return out
