"""CSV writers for run time series and sweep tables."""

from __future__ import annotations

import csv
from typing import Sequence, TextIO

from .engine import StepRecord
from .experiments import SweepResult

TIMESERIES_HEADER = (
    "step",
    "total_welfare",
    "utility_sum",
    "productivity_gains",
    "efficiency_penalty",
    "equity_penalty",
    "approvals",
    "approval_rate",
    "mean_trust",
    "mean_signal",
)

SWEEP_HEADER = (
    "param_value",
    "mean_welfare",
    "sd_welfare",
    "mean_approval_rate",
    "sd_approval_rate",
    "replicates",
)


def fmt(value: float | int) -> str:
    # repr() of a float is the shortest string that round-trips.
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def _writer(sink: TextIO):
    return csv.writer(sink, lineterminator="\n")


def write_timeseries_csv(records: Sequence[StepRecord], sink: TextIO) -> None:
    w = _writer(sink)
    w.writerow(TIMESERIES_HEADER)
    for r in records:
        b = r.breakdown
        w.writerow(
            [
                fmt(r.step),
                fmt(b.total),
                fmt(b.utility_sum),
                fmt(b.productivity_gains),
                fmt(b.efficiency_penalty),
                fmt(b.equity_penalty),
                fmt(r.approvals),
                fmt(r.approval_rate),
                fmt(r.mean_trust),
                fmt(r.mean_signal),
            ]
        )


def write_sweep_csv(result: SweepResult, sink: TextIO) -> None:
    w = _writer(sink)
    w.writerow(SWEEP_HEADER)
    for row in result.rows:
        w.writerow(
            [
                fmt(row.value),
                fmt(row.mean_welfare),
                fmt(row.sd_welfare),
                fmt(row.mean_approval_rate),
                fmt(row.sd_approval_rate),
                fmt(row.replicates),
            ]
        )
