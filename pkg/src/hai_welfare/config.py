"""JSON configuration: parsing with strict key checking, and canonical emission."""

from __future__ import annotations

import dataclasses
import json
from typing import Any

from .engine import AI_ATTRS, HUMAN_ATTRS, InitRanges, SimConfig
from .errors import ConfigError
from .model import ModelParams

TOP_LEVEL_KEYS = (
    "n_humans",
    "n_ai",
    "steps",
    "seed",
    "params",
    "init_ranges",
    "overrides",
    "forced_approval",
)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _integer(key: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{key}: expected an integer, got {value!r}")
    return value


def _real(key: str, value: Any) -> float:
    if not _is_number(value):
        raise ConfigError(f"{key}: expected a number, got {value!r}")
    return float(value)


def _check_keys(section: str, obj: Any, allowed) -> dict:
    if not isinstance(obj, dict):
        raise ConfigError(f"{section or 'config'}: expected a JSON object")
    for key in obj:
        if key not in allowed:
            where = f"{section}.{key}" if section else key
            raise ConfigError(f"unknown key {where!r}")
    return obj


def _parse_params(obj: Any) -> ModelParams:
    spec = {f.name: f for f in dataclasses.fields(ModelParams)}
    _check_keys("params", obj, spec)
    kwargs: dict[str, Any] = {}
    for key, value in obj.items():
        if spec[key].type in ("bool", bool):
            if not isinstance(value, bool):
                raise ConfigError(f"params.{key}: expected true or false, got {value!r}")
            kwargs[key] = value
        else:
            kwargs[key] = _real(f"params.{key}", value)
    return ModelParams(**kwargs)


def _parse_ranges(obj: Any) -> InitRanges:
    names = [f.name for f in dataclasses.fields(InitRanges)]
    _check_keys("init_ranges", obj, names)
    kwargs = {}
    for key, value in obj.items():
        if not isinstance(value, list) or len(value) != 2:
            raise ConfigError(f"init_ranges.{key}: expected [lo, hi]")
        lo = _real(f"init_ranges.{key}", value[0])
        hi = _real(f"init_ranges.{key}", value[1])
        kwargs[key] = (lo, hi)
    return InitRanges(**kwargs)


def config_from_dict(data: Any) -> SimConfig:
    _check_keys("", data, TOP_LEVEL_KEYS)
    kwargs: dict[str, Any] = {}
    for key in ("n_humans", "n_ai", "steps", "seed"):
        if key in data:
            kwargs[key] = _integer(key, data[key])
    if "params" in data:
        kwargs["params"] = _parse_params(data["params"])
    if "init_ranges" in data:
        kwargs["init_ranges"] = _parse_ranges(data["init_ranges"])
    if "overrides" in data:
        ov = _check_keys("overrides", data["overrides"], HUMAN_ATTRS + AI_ATTRS)
        kwargs["overrides"] = {k: _real(f"overrides.{k}", v) for k, v in ov.items()}
    if "forced_approval" in data:
        fa = data["forced_approval"]
        if fa is not None and not isinstance(fa, bool):
            raise ConfigError(f"forced_approval: expected null, true or false, got {fa!r}")
        kwargs["forced_approval"] = fa
    cfg = SimConfig(**kwargs)
    cfg.validate()
    return cfg


def parse_config(text: str) -> SimConfig:
    """Parse a JSON config. Missing keys take their defaults."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON: {exc}") from None
    return config_from_dict(data)


def config_to_dict(cfg: SimConfig) -> dict[str, Any]:
    return {
        "n_humans": cfg.n_humans,
        "n_ai": cfg.n_ai,
        "steps": cfg.steps,
        "seed": cfg.seed,
        "params": dataclasses.asdict(cfg.params),
        "init_ranges": {k: list(v) for k, v in dataclasses.asdict(cfg.init_ranges).items()},
        "overrides": dict(sorted(cfg.overrides.items())),
        "forced_approval": cfg.forced_approval,
    }


def dump_config(cfg: SimConfig) -> str:
    """Canonical JSON text; ``parse_config(dump_config(c)) == c``."""
    return json.dumps(config_to_dict(cfg), indent=2, sort_keys=True) + "\n"
