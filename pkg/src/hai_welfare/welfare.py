"""Per-step welfare decomposition.

total = approved utility + phi * collaboration index
        - psi * total cognitive cost - alpha * Var(per-human utility)

The collaboration index is kept unweighted; phi is applied once, in
:func:`total_welfare`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .model import InteractionRecord, ModelParams


@dataclass(frozen=True)
class WelfareBreakdown:
    utility_sum: float
    collab_index_raw: float
    productivity_gains: float
    efficiency_penalty: float
    equity_penalty: float
    total: float


def utility_sum(records: Sequence[InteractionRecord]) -> float:
    return math.fsum(r.utility for r in records if r.approved)


def collaboration_index(records: Sequence[InteractionRecord]) -> float:
    # Unapproved outputs produce no joint product.
    return math.fsum(r.surplus for r in records if r.approved)


def efficiency_penalty(records: Sequence[InteractionRecord], psi: float) -> float:
    # Evaluation effort is spent whether or not the output is approved.
    return psi * math.fsum(r.cost for r in records)


def equity_penalty(per_human_utility: Sequence[float], alpha: float) -> float:
    """alpha times the population (1/N) variance of realized per-human utility."""
    n = len(per_human_utility)
    if n == 0:
        raise DomainError("equity penalty needs at least one human")
    # Shifting by one member leaves the variance unchanged and makes it exactly
    # zero when every value is identical.
    ref = per_human_utility[0]
    shifted = [u - ref for u in per_human_utility]
    mean = math.fsum(shifted) / n
    var = math.fsum((u - mean) ** 2 for u in shifted) / n
    return alpha * var


def total_welfare(
    records: Sequence[InteractionRecord],
    per_human_utility: Sequence[float],
    params: ModelParams,
) -> WelfareBreakdown:
    util = utility_sum(records)
    collab = collaboration_index(records)
    gains = params.phi * collab
    eff = efficiency_penalty(records, params.psi)
    eq = equity_penalty(per_human_utility, params.alpha)
    return WelfareBreakdown(
        utility_sum=util,
        collab_index_raw=collab,
        productivity_gains=gains,
        efficiency_penalty=eff,
        equity_penalty=eq,
        total=util + gains - eff - eq,
    )


def realized_utilities(records: Sequence[InteractionRecord], n_humans: int) -> list[float]:
    """Per-human sum of approval-gated utility; humans with nothing approved get 0."""
    out = [0.0] * n_humans
    for r in records:
        if r.approved:
            out[r.human_id] += r.utility
    return out
