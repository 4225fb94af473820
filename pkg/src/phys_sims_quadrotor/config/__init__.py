"""Loading, validating and echoing experiment configuration files."""

from __future__ import annotations

import math
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from phys_sims_quadrotor.config.models import (
    WIDE_BAND_COLORS,
    ExperimentConfig,
    parse_seed_list,
)
from phys_sims_quadrotor.config.parser import FlatEntry, flatten, nest, parse_flat
from phys_sims_quadrotor.shared.errors import ConfigError

RESOLVED_CONFIG_NAME = "resolved-config"


def config_from_text(text: str, *, path: str = "<string>") -> ExperimentConfig:
    entries = parse_flat(text, path=path)
    return _validate(nest(entries, path=path), entries, path)


def load_config(path: str | Path | None = None) -> ExperimentConfig:
    """Load a config file, or the built-in defaults when ``path`` is ``None``."""
    if path is None:
        return ExperimentConfig()
    source = Path(path)
    try:
        text = source.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(str(source), None, "<file>", f"cannot read config: {exc}") from exc
    return config_from_text(text, path=str(source))


def apply_overrides(
    config: ExperimentConfig,
    overrides: Mapping[str, str],
    *,
    source: str = "<command line>",
) -> ExperimentConfig:
    """Re-validate ``config`` with dotted-key overrides given as raw strings."""
    if not overrides:
        return config
    entries = {key: FlatEntry(key=key, value=value, line=0) for key, value in overrides.items()}
    payload: dict[str, Any] = config.model_dump()
    for key, value in overrides.items():
        node = payload
        parts = key.split(".")
        for part in parts[:-1]:
            child = node.get(part)
            if not isinstance(child, dict):
                raise ConfigError(source, None, key, "unknown configuration key")
            node = child
        if parts[-1] not in node:
            raise ConfigError(source, None, key, "unknown configuration key")
        node[parts[-1]] = value
    if "noise.colored_std" not in overrides and _colored_std_is_derived(config):
        # Let a new power or sample time re-derive the colored amplitude.
        payload["noise"].pop("colored_std")
    return _validate(payload, entries, source)


def resolved_config_text(config: ExperimentConfig) -> str:
    """Every effective value in the loadable flat format."""
    lines = ["# resolved configuration: every effective value, defaults included"]
    lines.extend(f"{key} = {value}" for key, value in flatten(config.model_dump()))
    return "\n".join(lines) + "\n"


def write_resolved_config(config: ExperimentConfig, directory: str | Path) -> Path:
    destination = Path(directory) / RESOLVED_CONFIG_NAME
    destination.parent.mkdir(parents=True, exist_ok=True)
    destination.write_text(resolved_config_text(config), encoding="utf-8")
    return destination


def _validate(
    payload: dict[str, Any],
    entries: Mapping[str, FlatEntry],
    path: str,
) -> ExperimentConfig:
    try:
        return ExperimentConfig.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        key = ".".join(str(part) for part in first["loc"]) or "<config>"
        line = _line_for(key, entries)
        message = first["msg"]
        if first["type"] == "extra_forbidden":
            message = "unknown configuration key"
        if exc.error_count() > 1:
            message = f"{message} (+{exc.error_count() - 1} more)"
        raise ConfigError(path, line, key, message) from exc


def _colored_std_is_derived(config: ExperimentConfig) -> bool:
    noise = config.noise
    return noise.colored_std == math.sqrt(noise.power / noise.sample_time)


def _line_for(key: str, entries: Mapping[str, FlatEntry]) -> int | None:
    parts = key.split(".")
    while parts:
        entry = entries.get(".".join(parts))
        if entry is not None and entry.line > 0:
            return entry.line
        parts.pop()
    return None


__all__ = [
    "RESOLVED_CONFIG_NAME",
    "WIDE_BAND_COLORS",
    "ConfigError",
    "ExperimentConfig",
    "apply_overrides",
    "config_from_text",
    "load_config",
    "parse_seed_list",
    "resolved_config_text",
    "write_resolved_config",
]
