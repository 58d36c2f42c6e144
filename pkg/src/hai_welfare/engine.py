"""Populations and the discrete-time loop.

Randomness comes from numpy's PCG64 seeded through a ``SeedSequence``. Each run
has one root sequence, spawned into three independent child streams:

* ``init``     -- population attributes
* ``pairing``  -- which AI each human meets in a step
* ``approval`` -- the uniform draw compared against each approval probability

A phase only ever reads its own stream, so changing how many numbers one phase
consumes never shifts the draws of another.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields
from typing import Iterable

import numpy as np

from .errors import ConfigError
from .model import AiAgent, HumanAgent, InteractionRecord, ModelParams, evaluate_interaction
from .trust import init_trust_state, trust_from_state, update_signal, update_trust
from .welfare import WelfareBreakdown, realized_utilities, total_welfare

HUMAN_ATTRS = ("trust", "loss_aversion", "available_time", "expertise")
AI_ATTRS = ("signal", "complexity")


@dataclass
class InitRanges:
    """Closed [lo, hi] intervals for the uniform initial draws."""

    trust: tuple[float, float] = (0.5, 1.0)
    loss_aversion: tuple[float, float] = (0.5, 1.0)
    available_time: tuple[float, float] = (5.0, 20.0)
    expertise: tuple[float, float] = (1.0, 2.0)
    signal: tuple[float, float] = (0.8, 1.2)
    complexity: tuple[float, float] = (0.8, 1.5)

    def validate(self) -> None:
        for f in fields(self):
            lo, hi = getattr(self, f.name)
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise ConfigError(f"init_ranges.{f.name}: bounds must be finite")
            if lo > hi:
                raise ConfigError(f"init_ranges.{f.name}: lo > hi ({lo} > {hi})")
        lo, hi = self.trust
        if lo <= 0.0 or hi > 1.0 or lo >= 1.0:
            raise ConfigError("init_ranges.trust: must lie inside (0, 1)")
        for name in ("available_time", "expertise", "signal"):
            if getattr(self, name)[0] <= 0:
                raise ConfigError(f"init_ranges.{name}: lower bound must be > 0")
        for name in ("loss_aversion", "complexity"):
            if getattr(self, name)[0] < 0:
                raise ConfigError(f"init_ranges.{name}: lower bound must be >= 0")


@dataclass
class SimConfig:
    n_humans: int = 100
    n_ai: int = 500
    steps: int = 150
    seed: int = 0
    params: ModelParams = field(default_factory=ModelParams)
    init_ranges: InitRanges = field(default_factory=InitRanges)
    # Attribute name -> constant assigned to every agent (used by sweeps).
    overrides: dict[str, float] = field(default_factory=dict)
    # None samples approvals; True/False forces every outcome.
    forced_approval: bool | None = None

    def validate(self) -> None:
        for name in ("n_humans", "n_ai", "steps"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be an integer >= 1, got {value!r}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        self.params.validate()
        self.init_ranges.validate()
        for name, value in self.overrides.items():
            if name not in HUMAN_ATTRS + AI_ATTRS:
                raise ConfigError(f"overrides.{name}: unknown agent attribute")
            # A constant is a zero-width range; reuse the range checks.
            probe = InitRanges(**{**_ranges_dict(self.init_ranges), name: (value, value)})
            try:
                probe.validate()
            except ConfigError as exc:
                raise ConfigError(f"overrides.{name}: {exc}") from None
        if self.params.signal_max < self.init_ranges.signal[1]:
            raise ConfigError("params.signal_max must be >= init_ranges.signal upper bound")
        if "signal" in self.overrides and self.overrides["signal"] > self.params.signal_max:
            raise ConfigError("overrides.signal must be <= params.signal_max")
        if self.forced_approval not in (None, True, False):
            raise ConfigError("forced_approval must be null, true or false")


def _ranges_dict(ranges: InitRanges) -> dict[str, tuple[float, float]]:
    return {f.name: getattr(ranges, f.name) for f in fields(ranges)}


@dataclass(frozen=True)
class StepRecord:
    step: int
    breakdown: WelfareBreakdown
    approvals: int
    approval_rate: float
    mean_trust: float
    mean_signal: float


def make_streams(seed: int) -> dict[str, np.random.Generator]:
    init_ss, pairing_ss, approval_ss = np.random.SeedSequence(seed).spawn(3)
    return {
        "init": np.random.Generator(np.random.PCG64(init_ss)),
        "pairing": np.random.Generator(np.random.PCG64(pairing_ss)),
        "approval": np.random.Generator(np.random.PCG64(approval_ss)),
    }


def _draw(u: float, lo: float, hi: float) -> float:
    return lo + (hi - lo) * u


def init_population(
    config: SimConfig, rng: np.random.Generator
) -> tuple[list[HumanAgent], list[AiAgent]]:
    """Draw every agent attribute uniformly from its range.

    Draw order: humans by id, each taking trust, loss_aversion, available_time,
    expertise; then AIs by id, each taking signal, complexity. Overridden
    attributes still consume their draw so the rest of the population is
    unchanged.
    """
    config.validate()
    ranges = _ranges_dict(config.init_ranges)
    for name, value in config.overrides.items():
        ranges[name] = (value, value)

    h_u = rng.random((config.n_humans, len(HUMAN_ATTRS)))
    a_u = rng.random((config.n_ai, len(AI_ATTRS)))

    humans = []
    for i, row in enumerate(h_u.tolist()):
        vals = {name: _draw(u, *ranges[name]) for name, u in zip(HUMAN_ATTRS, row)}
        # lo + (hi-lo)*u can round up to hi; keep trust strictly below 1.
        trust = min(vals["trust"], math.nextafter(1.0, 0.0))
        humans.append(
            HumanAgent(
                id=i,
                loss_aversion=vals["loss_aversion"],
                expertise=vals["expertise"],
                available_time=vals["available_time"],
                trust_state=init_trust_state(trust, config.params.trust_prior_strength),
            )
        )
    ais = []
    for j, row in enumerate(a_u.tolist()):
        vals = {name: _draw(u, *ranges[name]) for name, u in zip(AI_ATTRS, row)}
        ais.append(AiAgent(id=j, signal_strength=vals["signal"], complexity=vals["complexity"]))
    return humans, ais


def pair_agents(n_humans: int, n_ai: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """One AI per human, drawn uniformly with replacement."""
    ai_ids = rng.integers(0, n_ai, size=n_humans)
    return list(zip(range(n_humans), ai_ids.tolist()))


class Economy:
    """Mutable state of one run: populations, parameters and RNG streams."""

    def __init__(self, config: SimConfig):
        config.validate()
        self.config = config
        self.params = config.params
        self.streams = make_streams(config.seed)
        self.humans, self.ais = init_population(config, self.streams["init"])
        self.t = 0
        self.last_records: list[InteractionRecord] = []

    def step(self) -> StepRecord:
        return step(self)

    def run(self, steps: int | None = None) -> list[StepRecord]:
        n = self.config.steps if steps is None else steps
        return [self.step() for _ in range(n)]


def step(economy: Economy) -> StepRecord:
    """Advance one period.

    Humans are visited in ascending id order. Each interaction is evaluated
    with the human's trust as it stood at the start of the step; the
    approval outcome then updates that human's trust and the AI's signal.
    An AI met by several humans in one step shows the later ones its
    already-updated signal.
    """
    params = economy.params
    humans, ais = economy.humans, economy.ais
    pairs = pair_agents(len(humans), len(ais), economy.streams["pairing"])
    draws = economy.streams["approval"].random(len(humans)).tolist()
    forced = economy.config.forced_approval

    records = []
    approvals = 0
    for (h_id, a_id), u in zip(pairs, draws):
        human, ai = humans[h_id], ais[a_id]
        rec = evaluate_interaction(human, ai, params)
        rec.approved = forced if forced is not None else u < rec.approval_prob
        approvals += rec.approved
        human.trust_state = update_trust(human.trust_state, rec.approved)
        ai.signal_strength = update_signal(ai.signal_strength, rec.approved, params)
        records.append(rec)

    breakdown = total_welfare(records, realized_utilities(records, len(humans)), params)
    economy.t += 1
    economy.last_records = records
    return StepRecord(
        step=economy.t,
        breakdown=breakdown,
        approvals=approvals,
        approval_rate=approvals / len(humans),
        mean_trust=math.fsum(trust_from_state(h.trust_state) for h in humans) / len(humans),
        mean_signal=math.fsum(a.signal_strength for a in ais) / len(ais),
    )


def run(config: SimConfig) -> list[StepRecord]:
    return Economy(config).run()


def window_mean(values: Iterable[float]) -> float:
    vals = list(values)
    return math.fsum(vals) / len(vals)
