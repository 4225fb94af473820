"""Flat ``key = value`` configuration text with dotted section keys."""

from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

from phys_sims_quadrotor.shared.errors import ConfigError

_KEY_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*(\.[A-Za-z_][A-Za-z0-9_]*)*$")


@dataclass(frozen=True)
class FlatEntry:
    key: str
    value: str
    line: int


def parse_flat(text: str, *, path: str = "<string>") -> dict[str, FlatEntry]:
    """Parse config text; ``#`` starts a comment and blank lines are skipped."""
    entries: dict[str, FlatEntry] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if "=" not in content:
            raise ConfigError(path, number, content, "expected 'key = value'")
        key, value = (part.strip() for part in content.split("=", 1))
        if not _KEY_PATTERN.match(key):
            raise ConfigError(path, number, key or "<empty>", "malformed dotted key")
        if not value:
            raise ConfigError(path, number, key, "missing value")
        if key in entries:
            first = entries[key].line
            raise ConfigError(path, number, key, f"duplicate key (first set on line {first})")
        entries[key] = FlatEntry(key=key, value=value, line=number)
    return entries


def nest(entries: Mapping[str, FlatEntry], *, path: str = "<string>") -> dict[str, Any]:
    """Expand dotted keys into nested dictionaries of raw string values."""
    tree: dict[str, Any] = {}
    for entry in entries.values():
        parts = entry.key.split(".")
        node = tree
        for depth, part in enumerate(parts[:-1]):
            child = node.setdefault(part, {})
            if not isinstance(child, dict):
                prefix = ".".join(parts[: depth + 1])
                msg = f"'{prefix}' is a value, not a section"
                raise ConfigError(path, entry.line, entry.key, msg)
            node = child
        leaf = parts[-1]
        if isinstance(node.get(leaf), dict):
            raise ConfigError(path, entry.line, entry.key, "is a section, not a value")
        node[leaf] = entry.value
    return tree


def flatten(payload: Mapping[str, Any], prefix: str = "") -> list[tuple[str, str]]:
    """Inverse of :func:`nest` over already-validated values, in mapping order."""
    items: list[tuple[str, str]] = []
    for key, value in payload.items():
        dotted = f"{prefix}{key}"
        if isinstance(value, Mapping):
            items.extend(flatten(value, prefix=f"{dotted}."))
        else:
            items.append((dotted, format_value(value)))
    return items


def format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, list | tuple):
        return ",".join(format_value(item) for item in value)
    return str(value)


__all__ = ["FlatEntry", "flatten", "format_value", "nest", "parse_flat"]
