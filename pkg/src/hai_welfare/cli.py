"""Command line entry point: ``run``, ``sweep`` and ``plot``.

Exit codes: 0 success, 1 validation or usage error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .config import config_to_dict, parse_config
from .engine import SimConfig, run
from .errors import ConfigError, DomainError
from .experiments import SweepSpec, linear_grid, run_sweep, summarize
from .output import write_sweep_csv, write_timeseries_csv
from .svg import render_line_chart

EXIT_OK, EXIT_USAGE, EXIT_IO = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _load_config(path: str | None) -> SimConfig:
    if path is None:
        return parse_config("{}")
    text = Path(path).read_text(encoding="utf-8")
    return parse_config(text)


def _open_out(path: Path):
    return open(path, "w", encoding="utf-8", newline="")


def cmd_run(args) -> int:
    cfg = _load_config(args.config)
    if args.seed is not None:
        cfg.seed = args.seed
        cfg.validate()
    records = run(cfg)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with _open_out(out / "timeseries.csv") as f:
        write_timeseries_csv(records, f)
    steps = [r.step for r in records]
    with _open_out(out / "welfare.svg") as f:
        render_line_chart(
            [("total welfare", steps, [r.breakdown.total for r in records])],
            f"Welfare over {cfg.steps} Time Steps",
            f,
            x_label="time step",
            y_label="welfare",
        )
    with _open_out(out / "approvals.svg") as f:
        render_line_chart(
            [("approval rate", steps, [r.approval_rate for r in records])],
            f"Approvals over {cfg.steps} Time Steps",
            f,
            x_label="time step",
            y_label="approval rate",
        )
    welfare, approval = summarize(records, min(50, len(records)))
    summary = {
        "config": config_to_dict(cfg),
        "final_window_mean_welfare": welfare,
        "final_window_mean_approval_rate": approval,
    }
    print(json.dumps(summary, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = _load_config(args.config)
    if args.seed is not None:
        cfg.seed = args.seed
    spec = SweepSpec(
        parameter=args.param,
        grid=linear_grid(args.start, args.stop, args.points),
        replicates=args.replicates,
        base_config=cfg,
        summary_window=min(args.window, cfg.steps),
    )
    result = run_sweep(spec, workers=args.workers)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with _open_out(out / f"sweep_{args.param}.csv") as f:
        write_sweep_csv(result, f)
    with _open_out(out / f"sweep_{args.param}.svg") as f:
        render_line_chart(
            [("mean welfare", result.column("value"), result.column("mean_welfare"))],
            f"Welfare sensitivity to {args.param}",
            f,
            x_label=args.param,
            y_label=f"mean welfare (last {spec.summary_window} steps)",
        )
    return EXIT_OK


def cmd_plot(args) -> int:
    with open(args.input, encoding="utf-8", newline="") as f:
        rows = list(csv.DictReader(f))
    if not rows:
        raise ConfigError(f"{args.input}: no data rows")
    cols = [c for c in args.y.split(",") if c]
    for col in [args.x] + cols:
        if col not in rows[0]:
            raise ConfigError(f"column {col!r} not found in {args.input}")
    try:
        xs = [float(r[args.x]) for r in rows]
        series = [(c, xs, [float(r[c]) for r in rows]) for c in cols]
    except ValueError as exc:
        raise ConfigError(f"non-numeric value: {exc}") from None
    with _open_out(Path(args.out)) as f:
        render_line_chart(series, args.title or Path(args.input).stem, f, x_label=args.x)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hai-welfare", description="Human/AI welfare agent-based simulator")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("run", help="simulate one run and write CSV + SVG outputs")
    r.add_argument("--config", help="JSON config file (defaults apply when omitted)")
    r.add_argument("--out", required=True, help="output directory")
    r.add_argument("--seed", type=int, help="override the config seed")
    r.set_defaults(func=cmd_run)

    s = sub.add_parser("sweep", help="one-factor sensitivity sweep")
    s.add_argument("--config")
    s.add_argument("--param", required=True)
    s.add_argument("--from", dest="start", type=float, required=True)
    s.add_argument("--to", dest="stop", type=float, required=True)
    s.add_argument("--points", type=int, required=True)
    s.add_argument("--replicates", type=int, default=20)
    s.add_argument("--window", type=int, default=50, help="final steps averaged per run")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--seed", type=int)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_sweep)

    pl = sub.add_parser("plot", help="redraw an SVG from an existing CSV")
    pl.add_argument("--in", dest="input", required=True)
    pl.add_argument("--out", required=True)
    pl.add_argument("--x", required=True)
    pl.add_argument("--y", required=True, help="comma-separated column names")
    pl.add_argument("--title")
    pl.set_defaults(func=cmd_plot)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ConfigError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
