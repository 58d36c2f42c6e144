"""Agent-based simulator of welfare in a mixed human/AI economy."""

from .engine import Economy, InitRanges, SimConfig, StepRecord, run
from .errors import ConfigError, DomainError
from .experiments import SweepResult, SweepSpec, run_sweep, spearman
from .model import AiAgent, HumanAgent, InteractionRecord, ModelParams, evaluate_interaction
from .welfare import WelfareBreakdown, total_welfare

__all__ = [
    "AiAgent",
    "ConfigError",
    "DomainError",
    "Economy",
    "HumanAgent",
    "InitRanges",
    "InteractionRecord",
    "ModelParams",
    "SimConfig",
    "StepRecord",
    "SweepResult",
    "SweepSpec",
    "WelfareBreakdown",
    "evaluate_interaction",
    "run",
    "run_sweep",
    "spearman",
    "total_welfare",
]
