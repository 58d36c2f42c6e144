"""Closed-form interaction math: cognitive cost, utility, bargaining surplus,
approval score and approval probability.

Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ConfigError, DomainError
from .trust import TrustState, trust_from_state


@dataclass
class ModelParams:
    """Weights and rates shared by every interaction in a run."""

    phi: float = 0.2  # collaboration weight
    psi: float = 0.1  # efficiency (cost) weight
    alpha: float = 0.05  # equity weight
    eta: float = 2.0  # trust weight in the approval score
    gamma: float = 3.0  # signal weight in the approval score
    risk: float = 0.5  # uniform baseline risk R
    u_h_independent: float = 0.0
    u_a_independent: float = 0.0
    trust_prior_strength: float = 10.0
    signal_learning_rate: float = 0.05
    signal_max: float = 1.5
    # Off by default: rejections leave the signal unchanged.
    signal_decay_on_reject: bool = False

    def validate(self) -> None:
        for name in ("phi", "psi", "alpha", "eta", "gamma", "risk"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ConfigError(f"{name} must be finite and >= 0, got {value!r}")
        for name in ("u_h_independent", "u_a_independent"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(f"{name} must be finite")
        if not self.trust_prior_strength > 0 or not math.isfinite(self.trust_prior_strength):
            raise ConfigError("trust_prior_strength must be > 0")
        if not 0.0 <= self.signal_learning_rate <= 1.0:
            raise ConfigError("signal_learning_rate must lie in [0, 1]")
        if not self.signal_max > 0 or not math.isfinite(self.signal_max):
            raise ConfigError("signal_max must be > 0")


@dataclass
class HumanAgent:
    id: int
    loss_aversion: float
    expertise: float
    available_time: float
    trust_state: TrustState = field(repr=False)

    @property
    def trust(self) -> float:
        return trust_from_state(self.trust_state)


@dataclass
class AiAgent:
    id: int
    signal_strength: float
    complexity: float


@dataclass(slots=True)
class InteractionRecord:
    """One human/AI pairing within one step."""

    human_id: int
    ai_id: int
    cost: float
    utility: float
    delta_u: float
    nbs: float
    score: float
    approval_prob: float
    surplus: float
    approved: bool = False


def cognitive_cost(complexity: float, expertise: float, available_time: float) -> float:
    """Effort to evaluate an AI output: complexity/expertise + 1/available_time."""
    if not expertise > 0:
        raise DomainError(f"expertise must be > 0, got {expertise!r}")
    if not available_time > 0:
        raise DomainError(f"available_time must be > 0, got {available_time!r}")
    if complexity < 0:
        raise DomainError(f"complexity must be >= 0, got {complexity!r}")
    return complexity / expertise + 1.0 / available_time


def interaction_utility(
    trust: float, signal: float, loss_aversion: float, risk: float, cost: float
) -> float:
    return trust * signal - loss_aversion * risk - cost


def nbs_surplus(u_h: float, u_a: float, d_h: float, d_a: float) -> float:
    """Two-party Nash product of gains over the disagreement points, clamped at 0."""
    return max(0.0, u_h - d_h) * max(0.0, u_a - d_a)


def approval_score(
    delta_u: float,
    loss_aversion: float,
    risk: float,
    cost: float,
    params: ModelParams,
    trust: float,
    nbs: float,
    signal: float,
) -> float:
    """Linear approval score.

    ``delta_u`` already contains the ``-loss_aversion*risk - cost`` terms through
    the utility; they are subtracted a second time here on purpose, matching the
    score as defined in the model.
    """
    return (
        delta_u
        - loss_aversion * risk
        - cost
        + params.eta * trust
        + params.phi * nbs
        + params.gamma * signal
    )


def approval_probability(score: float) -> float:
    # Two branches keep exp() from overflowing at either tail.
    if score >= 0:
        return 1.0 / (1.0 + math.exp(-score))
    z = math.exp(score)
    return z / (1.0 + z)


def evaluate_interaction(
    human: HumanAgent, ai: AiAgent, params: ModelParams
) -> InteractionRecord:
    """Fill every field of an InteractionRecord except ``approved``.

    The AI side of the bargaining surplus uses the signal strength as its
    utility, since the AI agent carries no other payoff.
    """
    trust = human.trust
    signal = ai.signal_strength
    cost = cognitive_cost(ai.complexity, human.expertise, human.available_time)
    utility = interaction_utility(trust, signal, human.loss_aversion, params.risk, cost)
    d_h = params.u_h_independent
    d_a = params.u_a_independent
    delta_u = utility - d_h
    nbs = nbs_surplus(utility, signal, d_h, d_a)
    score = approval_score(
        delta_u, human.loss_aversion, params.risk, cost, params, trust, nbs, signal
    )
    return InteractionRecord(
        human_id=human.id,
        ai_id=ai.id,
        cost=cost,
        utility=utility,
        delta_u=delta_u,
        nbs=nbs,
        score=score,
        approval_prob=approval_probability(score),
        surplus=max(0.0, utility - d_h - d_a),
    )
