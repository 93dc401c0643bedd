import hashlib
import logging
from typing import Optional, Sequence, Union

import numpy as np

from vanderspec.errors import InvalidDensityError

logger = logging.getLogger(__name__)

_MANTISSA_BITS = 53


def hash64(*parts) -> int:
    """
    Hash an arbitrary tuple of ints and strings into a 64-bit seed.

    The digest depends only on the repr of the parts, so it is stable across
    processes and interpreter runs (unlike the builtin hash()).

    Args:
        *parts: values identifying a random stream, e.g. (base seed, experiment, trial)

    Returns:
        int: unsigned 64-bit integer
    """
    digest = hashlib.blake2b(repr(parts).encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


class SeedSpec:
    """
    Identifies the random stream of one trial.

    Attributes:
        base_seed (int): 64-bit user seed
        trial_index (int): index of the trial inside an experiment
        stream (str): name of the experiment (or any sub-stream label)
    """

    def __init__(self, base_seed: int, trial_index: int = 0, stream: str = ""):
        if base_seed < 0 or base_seed >= 2 ** 64:
            raise ValueError(f"base seed must be a 64-bit unsigned integer, got {base_seed}")
        self.base_seed = int(base_seed)
        self.trial_index = int(trial_index)
        self.stream = stream

    def seed_value(self) -> int:
        return hash64(self.base_seed, self.stream, self.trial_index)

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed_value())

    def for_trial(self, trial_index: int) -> 'SeedSpec':
        return SeedSpec(self.base_seed, trial_index, self.stream)

    def __repr__(self):
        return f"SeedSpec(base_seed={self.base_seed}, trial_index={self.trial_index}, stream={self.stream!r})"

    def __eq__(self, other):
        if not isinstance(other, SeedSpec):
            return False
        return (self.base_seed, self.trial_index, self.stream) == (other.base_seed, other.trial_index, other.stream)

    def __hash__(self):
        return hash((self.base_seed, self.trial_index, self.stream))


RandomSource = Union[SeedSpec, np.random.Generator, int]


def as_generator(seed: RandomSource) -> np.random.Generator:
    if isinstance(seed, SeedSpec):
        return seed.rng()
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


class InverseCdfDensity:
    """
    Phase density given by its inverse CDF tabulated on an equally spaced grid of [0, 1].

    Samples are obtained by linear interpolation of the table at uniform draws.
    """

    def __init__(self, table: Sequence[float]):
        table = np.asarray(table, dtype=np.float64)
        if table.ndim != 1 or table.size < 2:
            raise InvalidDensityError("inverse-CDF table needs at least two values")
        if np.any(~np.isfinite(table)) or table.min() < 0.0 or table.max() > 1.0:
            raise InvalidDensityError("inverse-CDF table values must lie in [0, 1]")
        if np.any(np.diff(table) < 0.0):
            raise InvalidDensityError("inverse-CDF table must be non-decreasing")
        self.table = table
        self.grid = np.linspace(0.0, 1.0, table.size)

    def transform(self, u: np.ndarray) -> np.ndarray:
        x = np.interp(u, self.grid, self.table)
        return np.minimum(x, np.nextafter(1.0, 0.0))

    def __repr__(self):
        return f"InverseCdfDensity(points={self.table.size})"


class PhaseVector:
    """
    L phases (or d-dimensional phase tuples) in [0, 1).

    When the vector was drawn with high resolution, `words` holds every entry as a
    `bits`-bit fixed point integer (entry = word / 2**bits); `entries` is then the
    correctly truncated float view of the same numbers.
    """

    def __init__(self, entries, words: Optional[np.ndarray] = None, bits: Optional[int] = None):
        entries = np.asarray(entries, dtype=np.float64)
        if entries.ndim == 1:
            entries = entries.reshape(-1, 1)
        if entries.ndim != 2 or entries.shape[0] < 1 or entries.shape[1] < 1:
            raise ValueError(f"phase entries must be an L x d array with L, d >= 1, got shape {entries.shape}")
        if np.any(entries < 0.0) or np.any(entries >= 1.0):
            raise ValueError("every phase must lie in [0, 1)")
        if (words is None) != (bits is None):
            raise ValueError("fixed point words and their bit count go together")
        if words is not None:
            words = np.asarray(words, dtype=object).reshape(entries.shape)
        self.entries = entries
        self.words = words
        self.bits = bits

    @property
    def L(self) -> int:
        return self.entries.shape[0]

    @property
    def d(self) -> int:
        return self.entries.shape[1]

    @property
    def high_resolution(self) -> bool:
        return self.words is not None

    def column(self, j: int = 0) -> np.ndarray:
        return self.entries[:, j]

    def angles(self) -> np.ndarray:
        """Angles 2*pi*theta in radians (first coordinate)."""
        return 2.0 * np.pi * self.entries[:, 0]

    def nodes(self) -> np.ndarray:
        """Unit-circle nodes exp(2*pi*i*theta) (first coordinate)."""
        return np.exp(2j * np.pi * self.entries[:, 0])

    def __len__(self):
        return self.L

    def __repr__(self):
        resolution = f", bits={self.bits}" if self.high_resolution else ""
        return f"PhaseVector(L={self.L}, d={self.d}{resolution})"

    def __eq__(self, other):
        if not isinstance(other, PhaseVector):
            return False
        return np.array_equal(self.entries, other.entries) and self.bits == other.bits


def _draw_words(rng: np.random.Generator, shape, bits: int) -> np.ndarray:
    n_words = -(-bits // 64)
    raw = rng.integers(0, 2 ** 64 - 1, size=(*shape, n_words), dtype=np.uint64, endpoint=True)
    words = np.empty(shape, dtype=object)
    excess = 64 * n_words - bits
    for index in np.ndindex(*shape):
        value = 0
        for chunk in raw[index]:
            value = (value << 64) | int(chunk)
        words[index] = value >> excess
    return words


def sample_phases(L: int, d: int = 1, density: Optional[InverseCdfDensity] = None, seed: RandomSource = 0,
                  bits: Optional[int] = None) -> PhaseVector:
    """
    Draw L*d i.i.d. phases in [0, 1).

    Args:
        L (int): number of columns (phases)
        d (int): phase dimension
        density (InverseCdfDensity, optional): non-uniform density, uniform when None
        seed: SeedSpec (preferred), numpy Generator or integer seed
        bits (int, optional): draw uniform phases with this many random bits (>= 53)
            and keep the fixed point words for exact exponent reduction

    Returns:
        PhaseVector: deterministic given the seed
    """
    if L < 1 or d < 1:
        raise ValueError(f"L and d must be >= 1, got L={L}, d={d}")
    rng = as_generator(seed)
    if bits is None:
        u = rng.random((L, d))
        if density is not None:
            u = density.transform(u)
        return PhaseVector(u)

    if density is not None:
        raise ValueError("high-resolution phases are only available for the uniform density")
    if bits < _MANTISSA_BITS:
        raise ValueError(f"bits must be at least {_MANTISSA_BITS}, got {bits}")
    words = _draw_words(rng, (L, d), bits)
    shift = bits - _MANTISSA_BITS
    mantissas = np.array([[w >> shift for w in row] for row in words], dtype=object)
    entries = mantissas.astype(np.float64) * 2.0 ** -_MANTISSA_BITS
    logger.debug(f"Sampled {L}x{d} phases with {bits} random bits")
    return PhaseVector(entries, words=words, bits=bits)
