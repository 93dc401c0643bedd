import json
import logging
import os
from dataclasses import asdict, dataclass, field, replace
from typing import List, Optional

from vanderspec.errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULTS_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
                             'config', 'experiments', 'defaults.json')
WORKERS_ENV = 'VANDERSPEC_WORKERS'
FORMATS = ("csv", "json")


def _load_from_json(filename: str) -> dict:
    with open(filename, 'r') as fd:
        return json.load(fd)


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Knobs of one experiment run; every field but the output path is echoed in the output metadata.

    `l` fixes the number of columns L; otherwise L = round(beta * N**d).
    """
    name: str
    ns: List[int] = field(default_factory=lambda: [16])
    l: Optional[int] = None
    beta: float = 1.0
    d: int = 1
    trials: int = 100
    seed: int = 0
    eps: float = 0.5
    out: Optional[str] = None
    fmt: str = "csv"
    k_seq: str = "pow2"
    grid: int = 4096
    depth: int = 6
    p_range: List[float] = field(default_factory=lambda: [1.0, 16.0, 1.0])
    bins: Optional[int] = None

    def columns(self, N: int) -> int:
        if self.l is not None:
            return self.l
        return max(1, int(round(self.beta * N ** self.d)))

    def p_values(self) -> List[float]:
        """The thresholds exponents p; G is evaluated at 10**-p."""
        start, stop, step = self.p_range
        count = int(round((stop - start) / step)) + 1
        return [start + i * step for i in range(count)]

    def k_sequences(self) -> List[str]:
        return [name.strip() for name in self.k_seq.split(",") if name.strip()]

    def validate(self) -> 'ExperimentConfig':
        if not self.ns or any(n < 1 for n in self.ns):
            raise ConfigError(f"every N must be a positive integer, got {self.ns}")
        if self.l is not None and self.l < 1:
            raise ConfigError(f"L must be positive, got {self.l}")
        if self.beta <= 0:
            raise ConfigError(f"beta must be positive, got {self.beta}")
        if self.d not in (1, 2, 3):
            raise ConfigError(f"d must be 1, 2 or 3, got {self.d}")
        if self.trials < 1:
            raise ConfigError(f"trials must be positive, got {self.trials}")
        if self.seed < 0:
            raise ConfigError(f"seed must be non-negative, got {self.seed}")
        if self.eps <= 0:
            raise ConfigError(f"eps must be positive, got {self.eps}")
        if self.fmt not in FORMATS:
            raise ConfigError(f"unknown output format '{self.fmt}', expected one of {FORMATS}")
        unknown = [name for name in self.k_sequences() if name not in ("linear", "pow2", "square")]
        if unknown or not self.k_sequences():
            raise ConfigError(f"unknown exponent sequence in '{self.k_seq}'")
        if self.grid < 2 or self.grid & (self.grid - 1):
            raise ConfigError(f"grid must be a power of two >= 2, got {self.grid}")
        if self.depth < 0:
            raise ConfigError(f"depth must be non-negative, got {self.depth}")
        if len(self.p_range) != 3 or self.p_range[2] <= 0 or self.p_range[1] < self.p_range[0]:
            raise ConfigError(f"p range must be start:stop:step with step > 0, got {self.p_range}")
        if self.bins is not None and self.bins < 1:
            raise ConfigError(f"bins must be positive, got {self.bins}")
        return self

    def to_metadata(self) -> dict:
        echo = asdict(self)
        del echo["out"]
        echo["ns"] = ",".join(str(n) for n in self.ns)
        echo["p_range"] = ":".join(f"{p:g}" for p in self.p_range)
        return echo


def parse_ns(text: str) -> List[int]:
    """'16,32,64' -> [16, 32, 64]."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigError(f"N list must be comma separated integers, got '{text}'")


def parse_p_range(text: str) -> List[float]:
    """'start:stop:step' (step defaults to 1)."""
    parts = text.split(":")
    try:
        values = [float(part) for part in parts]
    except ValueError:
        raise ConfigError(f"p range must be start:stop[:step], got '{text}'")
    if len(values) == 2:
        values.append(1.0)
    if len(values) != 3:
        raise ConfigError(f"p range must be start:stop[:step], got '{text}'")
    return values


def load_experiment_config(name: str, overrides: Optional[dict] = None, path: str = DEFAULTS_PATH) -> ExperimentConfig:
    """
    Defaults of the experiment from the JSON template, overridden by the non-None values of `overrides`.

    Raises:
        ConfigError: unknown experiment, unknown knob or invalid value
    """
    templates = _load_from_json(path)
    if name not in templates:
        raise ConfigError(f"no defaults for experiment '{name}' in {path}")
    values = dict(templates.get("common", {}))
    values.update(templates[name])
    values.update({key: value for key, value in (overrides or {}).items() if value is not None})
    try:
        config = ExperimentConfig(name=name, **values)
    except TypeError as e:
        raise ConfigError(f"invalid configuration for '{name}': {e}")
    return config.validate()


def with_overrides(config: ExperimentConfig, **changes) -> ExperimentConfig:
    return replace(config, **changes).validate()


def worker_count() -> int:
    """Process count from VANDERSPEC_WORKERS, 1 (serial) when unset."""
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        workers = int(raw)
    except ValueError:
        raise ConfigError(f"{WORKERS_ENV} must be an integer, got '{raw}'")
    if workers < 1:
        raise ConfigError(f"{WORKERS_ENV} must be >= 1, got {workers}")
    return workers
