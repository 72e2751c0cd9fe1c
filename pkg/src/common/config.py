from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import yaml

from .exceptions import ConfigError

DEFAULT_SETTINGS_PATH = Path(__file__).resolve().parents[2] / "config" / "lcsw.yaml"
BUDGET_ENV_VAR = "LCSW_BUDGET"
SHIFT_STRATEGIES = {"exhaustive", "sampled"}


@dataclass(frozen=True)
class Settings:
    oracle_budget: int
    full_table_cells: int
    shift_strategy: str
    sample_count: int
    seed: int
    confidence_z: float
    gamma_cell_budget: int
    version: str


def load_yaml(path: str | Path) -> dict[str, Any]:
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


def _require_dict(value: Any, label: str) -> dict[str, Any]:
    if not isinstance(value, dict):
        raise ConfigError(f"{label} must be a mapping")
    return value


def _require_keys(section: dict[str, Any], keys: set[str], label: str) -> None:
    missing = [key for key in sorted(keys) if key not in section]
    if missing:
        raise ConfigError(f"{label} missing keys: {', '.join(missing)}")


def _require_int(value: Any, label: str, *, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ConfigError(f"{label} must be an integer >= {minimum}")
    return value


def validate_settings(config: dict[str, Any]) -> None:
    root = _require_dict(config, "settings")
    _require_keys(root, {"oracle", "lcs", "matcher", "gamma", "reports"}, "settings")

    oracle = _require_dict(root.get("oracle"), "oracle")
    _require_keys(oracle, {"budget"}, "oracle")
    _require_int(oracle["budget"], "oracle.budget", minimum=1)

    lcs = _require_dict(root.get("lcs"), "lcs")
    _require_keys(lcs, {"full_table_cells"}, "lcs")
    _require_int(lcs["full_table_cells"], "lcs.full_table_cells", minimum=1)

    matcher = _require_dict(root.get("matcher"), "matcher")
    _require_keys(matcher, {"shift_strategy", "sample_count", "seed"}, "matcher")
    if matcher["shift_strategy"] not in SHIFT_STRATEGIES:
        raise ConfigError(
            f"matcher.shift_strategy must be one of {sorted(SHIFT_STRATEGIES)}, "
            f"got {matcher['shift_strategy']!r}"
        )
    _require_int(matcher["sample_count"], "matcher.sample_count", minimum=1)
    _require_int(matcher["seed"], "matcher.seed", minimum=0)

    gamma = _require_dict(root.get("gamma"), "gamma")
    _require_keys(gamma, {"confidence_z", "cell_budget"}, "gamma")
    _require_int(gamma["cell_budget"], "gamma.cell_budget", minimum=1)
    z = gamma["confidence_z"]
    if isinstance(z, bool) or not isinstance(z, (int, float)) or z <= 0:
        raise ConfigError("gamma.confidence_z must be a positive number")

    reports = _require_dict(root.get("reports"), "reports")
    _require_keys(reports, {"version"}, "reports")
    if not isinstance(reports["version"], str) or not reports["version"]:
        raise ConfigError("reports.version must be a non-empty string")


def _budget_override(default: int) -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ConfigError(f"{BUDGET_ENV_VAR} must be >= 1, got {value}")
    return value


def load_settings(path: Path | None = None) -> Settings:
    source = path or DEFAULT_SETTINGS_PATH
    try:
        config = load_yaml(source)
    except (OSError, yaml.YAMLError) as exc:
        raise ConfigError(f"cannot load settings from '{source}': {exc}") from exc
    if not isinstance(config, dict):
        raise ConfigError("Settings file must be a mapping")
    validate_settings(config)
    return Settings(
        oracle_budget=_budget_override(config["oracle"]["budget"]),
        full_table_cells=config["lcs"]["full_table_cells"],
        shift_strategy=config["matcher"]["shift_strategy"],
        sample_count=config["matcher"]["sample_count"],
        seed=config["matcher"]["seed"],
        confidence_z=float(config["gamma"]["confidence_z"]),
        gamma_cell_budget=config["gamma"]["cell_budget"],
        version=config["reports"]["version"],
    )
