"""Shared matplotlib helpers for deterministic figures."""

from __future__ import annotations

from importlib import import_module
from pathlib import Path
from typing import Any


def require_matplotlib() -> Any:
    """Import and return ``matplotlib.pyplot`` or raise a clear error."""
    try:
        return import_module("matplotlib.pyplot")
    except ImportError as exc:  # pragma: no cover - optional dependency path
        msg = "plotting requires matplotlib; install the 'plot' extra"
        raise RuntimeError(msg) from exc


def make_output_path(path: str | Path, *, default_suffix: str = ".png") -> Path:
    output = Path(path)
    if output.suffix == "":
        output = output.with_suffix(default_suffix)
    output.parent.mkdir(parents=True, exist_ok=True)
    return output


def create_figure(
    *,
    nrows: int = 1,
    ncols: int = 1,
    figsize: tuple[float, float] = (7.0, 4.5),
) -> tuple[Any, Any]:
    plt = require_matplotlib()
    fig, axes = plt.subplots(nrows, ncols, figsize=figsize, constrained_layout=True)
    return fig, axes


def finalize_figure(fig: Any, output_path: str | Path, *, dpi: int = 150) -> Path:
    """Save ``fig`` and close it."""
    destination = make_output_path(output_path)
    fig.savefig(destination, dpi=dpi)
    require_matplotlib().close(fig)
    return destination


__all__ = ["create_figure", "finalize_figure", "make_output_path", "require_matplotlib"]
