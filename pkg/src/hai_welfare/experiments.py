"""One-factor sensitivity sweeps with replicated runs."""

from __future__ import annotations

import copy
import dataclasses
import hashlib
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import stats

from .engine import AI_ATTRS, HUMAN_ATTRS, SimConfig, StepRecord, run
from .errors import ConfigError, DomainError
from .model import ModelParams

# Public sweep names mapped to (kind, target). "override" fixes an agent
# attribute for the whole population; "param" replaces a ModelParams scalar.
PARAMETER_ALIASES = {
    "ai_complexity": ("override", "complexity"),
    "human_expertise": ("override", "expertise"),
    "risk": ("param", "risk"),
}

DEFAULT_GRIDS = {
    "ai_complexity": (0.5, 3.0, 11),
    "human_expertise": (0.5, 3.0, 11),
    "risk": (0.0, 2.0, 11),
}
DEFAULT_REPLICATES = 20


def resolve_parameter(name: str) -> tuple[str, str]:
    if name in PARAMETER_ALIASES:
        return PARAMETER_ALIASES[name]
    if name in HUMAN_ATTRS + AI_ATTRS:
        return "override", name
    scalar_params = {
        f.name for f in dataclasses.fields(ModelParams) if f.type in ("float", float)
    }
    if name in scalar_params:
        return "param", name
    raise ConfigError(f"unknown sweep parameter {name!r}")


def linear_grid(start: float, stop: float, points: int) -> list[float]:
    if points < 1:
        raise ConfigError("points must be >= 1")
    if points == 1:
        return [float(start)]
    return np.linspace(start, stop, points).tolist()


@dataclass
class SweepSpec:
    parameter: str
    grid: list[float]
    replicates: int = DEFAULT_REPLICATES
    base_config: SimConfig = dataclasses.field(default_factory=SimConfig)
    summary_window: int = 50

    def validate(self) -> None:
        resolve_parameter(self.parameter)
        if not self.grid:
            raise ConfigError("sweep grid is empty")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ConfigError("sweep grid must be strictly increasing")
        if self.replicates < 1:
            raise ConfigError("replicates must be >= 1")
        if self.summary_window < 1:
            raise ConfigError("summary_window must be >= 1")
        self.base_config.validate()


@dataclass(frozen=True)
class SweepRow:
    value: float
    mean_welfare: float
    sd_welfare: float
    mean_approval_rate: float
    sd_approval_rate: float
    replicates: int


@dataclass(frozen=True)
class SweepResult:
    parameter: str
    rows: list[SweepRow]

    def column(self, name: str) -> list[float]:
        return [getattr(r, name) for r in self.rows]


def replicate_seed(base_seed: int, point: int, replicate: int) -> int:
    """Base seed XOR a stable 64-bit hash of (grid index, replicate)."""
    digest = hashlib.blake2b(f"{point}:{replicate}".encode(), digest_size=8).digest()
    return base_seed ^ int.from_bytes(digest, "little")


def replicate_config(spec: SweepSpec, point: int, replicate: int) -> SimConfig:
    kind, target = resolve_parameter(spec.parameter)
    value = float(spec.grid[point])
    cfg = copy.deepcopy(spec.base_config)
    cfg.seed = replicate_seed(spec.base_config.seed, point, replicate)
    if kind == "override":
        cfg.overrides = {**cfg.overrides, target: value}
    else:
        cfg.params = dataclasses.replace(cfg.params, **{target: value})
    cfg.validate()
    return cfg


def summarize(records: Sequence[StepRecord], window: int) -> tuple[float, float]:
    """Mean welfare and mean approval rate over the last ``window`` steps."""
    tail = records[-window:]
    welfare = math.fsum(r.breakdown.total for r in tail) / len(tail)
    approval = math.fsum(r.approval_rate for r in tail) / len(tail)
    return welfare, approval


def _run_one(args: tuple[SimConfig, int]) -> tuple[float, float]:
    cfg, window = args
    return summarize(run(cfg), window)


def _sd(values: list[float]) -> float:
    return statistics.stdev(values) if len(values) > 1 else 0.0


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Run every (grid point, replicate) and aggregate per grid point.

    Seeds depend only on the base seed, grid index and replicate index, and
    results are reduced in grid/replicate order, so ``workers`` never changes
    the output.
    """
    spec.validate()
    tasks = [
        (replicate_config(spec, i, r), spec.summary_window)
        for i in range(len(spec.grid))
        for r in range(spec.replicates)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        results = [_run_one(t) for t in tasks]

    rows = []
    for i, value in enumerate(spec.grid):
        chunk = results[i * spec.replicates : (i + 1) * spec.replicates]
        w = [c[0] for c in chunk]
        a = [c[1] for c in chunk]
        rows.append(
            SweepRow(
                value=float(value),
                mean_welfare=math.fsum(w) / len(w),
                sd_welfare=_sd(w),
                mean_approval_rate=math.fsum(a) / len(a),
                sd_approval_rate=_sd(a),
                replicates=spec.replicates,
            )
        )
    return SweepResult(parameter=spec.parameter, rows=rows)


def spearman(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Spearman rank correlation; tied values get average ranks."""
    if len(xs) != len(ys):
        raise DomainError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if len(xs) < 2:
        raise DomainError("need at least two points")
    return float(stats.spearmanr(xs, ys).statistic)
