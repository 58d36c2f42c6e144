"""Beta-Bernoulli trust state and AI signal adaptation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import DomainError

if TYPE_CHECKING:
    from .model import ModelParams


@dataclass(frozen=True)
class TrustState:
    """Beta pseudo-counts; trust is the posterior mean."""

    successes: float
    failures: float


def init_trust_state(initial_trust: float, prior_strength: float) -> TrustState:
    if not 0.0 < initial_trust < 1.0:
        raise DomainError(f"initial trust must lie in (0, 1), got {initial_trust!r}")
    if not prior_strength > 0:
        raise DomainError(f"prior strength must be > 0, got {prior_strength!r}")
    return TrustState(initial_trust * prior_strength, (1.0 - initial_trust) * prior_strength)


def trust_from_state(state: TrustState) -> float:
    return state.successes / (state.successes + state.failures)


def update_trust(state: TrustState, approved: bool) -> TrustState:
    if approved:
        return TrustState(state.successes + 1.0, state.failures)
    return TrustState(state.successes, state.failures + 1.0)


def update_signal(signal: float, approved: bool, params: ModelParams) -> float:
    """Move the signal a fraction of the way to ``signal_max`` on approval.

    Rejections leave it unchanged unless ``params.signal_decay_on_reject`` is set,
    in which case it shrinks by the same fraction.
    """
    rate = params.signal_learning_rate
    if approved:
        return min(params.signal_max, signal + rate * (params.signal_max - signal))
    if params.signal_decay_on_reject:
        return signal * (1.0 - rate)
    return signal
