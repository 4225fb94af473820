"""Batch command-line front-end: ``simulate``, ``compare``, ``sweep`` and ``noise``."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from phys_sims_quadrotor.config import (
    ExperimentConfig,
    apply_overrides,
    load_config,
    resolved_config_text,
    write_resolved_config,
)
from phys_sims_quadrotor.control.base import ControllerKind
from phys_sims_quadrotor.harness.core import (
    CONTROLLER_NAMES,
    RunTask,
    execute_run,
    run_compare,
    run_sweep,
)
from phys_sims_quadrotor.harness.logging import RunLogger
from phys_sims_quadrotor.harness.plotting import plot_noise_psd, plot_reference_tracking
from phys_sims_quadrotor.harness.records import CompareResult
from phys_sims_quadrotor.harness.reporting import (
    ORDERING_HEADER,
    build_compare_summary,
    build_sweep_summary,
    ordering_rows,
    save_summary,
    table_rows,
    write_csv,
    write_metrics_table,
)
from phys_sims_quadrotor.noise.spec import target_slope
from phys_sims_quadrotor.noise.spectrum import psd_slope, welch_psd
from phys_sims_quadrotor.noise.stream import NoiseStream
from phys_sims_quadrotor.shared.errors import BandError, ConfigError
from phys_sims_quadrotor.shared.seeding import derive_seed, hash_text
from phys_sims_quadrotor.sim.trace import read_trace_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUN = 2
EXIT_ACCEPTANCE = 3
SLOPE_TOLERANCE_DB = 3.0

CommandFn = Callable[[argparse.Namespace, ExperimentConfig, Path], int]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=None, help="flat key = value file")
    seeds = common.add_mutually_exclusive_group()
    seeds.add_argument("--seed", type=int, default=None, help="run a single seed")
    seeds.add_argument("--seeds", default=None, help='seed battery, e.g. "1..20" or "3,5,8"')
    common.add_argument("--out", type=Path, default=None, help="output directory")
    common.add_argument(
        "--band",
        type=float,
        default=None,
        help="settling band in percent for every noise color",
    )
    common.add_argument("--noise", default=None, help="noise color or 'none'")
    common.add_argument("--controller", default=None, help="pid, lyapunov or backstepping")
    common.add_argument("--workers", type=int, default=None, help="parallel run processes")
    common.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override any dotted configuration key",
    )
    common.add_argument("--plots", action="store_true", help="also write PNG figures")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(
        prog="quadsim",
        description="Quadrotor controller robustness experiments under colored noise.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    simulate = sub.add_parser("simulate", parents=[common], help="one run, trace and metrics")
    simulate.set_defaults(func=cmd_simulate)

    compare = sub.add_parser("compare", parents=[common], help="three controllers, one noise")
    compare.set_defaults(func=cmd_compare)

    sweep = sub.add_parser("sweep", parents=[common], help="compare under all five colors")
    sweep.set_defaults(func=cmd_sweep)

    noise = sub.add_parser("noise", parents=[common], help="dump samples, PSD and slope")
    noise.add_argument("--samples", type=int, default=None, help="number of samples")
    noise.set_defaults(func=cmd_noise)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        config = resolve_config(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    output_dir = Path(config.run.output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    write_resolved_config(config, output_dir)
    command: CommandFn = args.func
    return command(args, config, output_dir)


def resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    """Config file (or defaults) with command-line flags applied as dotted overrides."""
    config = load_config(args.config)
    overrides: dict[str, str] = {}
    for item in args.overrides:
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise ConfigError("<command line>", None, item, "expected KEY=VALUE")
        overrides[key.strip()] = value.strip()
    if args.seed is not None:
        overrides["run.seeds"] = str(args.seed)
    if args.seeds is not None:
        overrides["run.seeds"] = args.seeds
    if args.out is not None:
        overrides["run.output_dir"] = str(args.out)
    if args.band is not None:
        overrides["metrics.band_pct"] = repr(args.band)
        overrides["metrics.wide_band_pct"] = repr(args.band)
    if args.noise is not None:
        overrides["noise.color"] = args.noise
    if args.controller is not None:
        overrides["run.controller"] = args.controller
    if args.workers is not None:
        overrides["run.workers"] = str(args.workers)
    if getattr(args, "samples", None) is not None:
        overrides["spectrum.samples"] = str(args.samples)
    return apply_overrides(config, overrides)


def cmd_simulate(args: argparse.Namespace, config: ExperimentConfig, output_dir: Path) -> int:
    kind = ControllerKind(config.run.controller)
    color = config.noise.resolve_color()
    seed = config.run.seeds[0]
    with _run_logger(config, output_dir, "simulate") as run_logger:
        record = execute_run(RunTask(config, kind, color, seed, output_dir))
        run_logger.log_run(record)

    if not record.ok:
        print(
            f"run error: controller={kind.value} noise={record.noise} seed={seed}: "
            f"{record.error}: {record.message}",
            file=sys.stderr,
        )
        return EXIT_RUN

    results = {(kind.value, channel): value for channel, value in record.metrics.items()}
    table = write_metrics_table(
        output_dir / "metrics" / record.noise / f"{kind.value}-seed{seed}.csv",
        table_rows(results, (kind.value,), record.noise, record.band_pct),
    )
    if args.plots:
        stem = f"{kind.value}-seed{seed}"
        _plot_traces(config, output_dir, {kind.value: record.trace_path}, stem)
    print(f"trace: {output_dir / record.trace_path}")
    print(f"metrics: {table}")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, config: ExperimentConfig, output_dir: Path) -> int:
    color = config.noise.resolve_color()
    with _run_logger(config, output_dir, "compare") as run_logger:
        result = run_compare(config, color, output_dir=output_dir, run_logger=run_logger)

    summary = write_metrics_table(output_dir / "summary.csv", _aggregate_rows(result))
    save_summary(
        build_compare_summary(result, config_hash=_config_hash(config)),
        output_dir / "summary.json",
    )
    _report_failures(result)
    if args.plots:
        _plot_compare(config, output_dir, result)
    print(f"summary: {summary}")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, config: ExperimentConfig, output_dir: Path) -> int:
    with _run_logger(config, output_dir, "sweep") as run_logger:
        outcome = run_sweep(config, output_dir=output_dir, run_logger=run_logger)

    write_csv(output_dir / "summary.csv", ORDERING_HEADER, ordering_rows(outcome.cells))
    save_summary(
        build_sweep_summary(outcome, config_hash=_config_hash(config)),
        output_dir / "summary.json",
    )
    for result in outcome.compares:
        _report_failures(result)
        if args.plots:
            _plot_compare(config, output_dir, result)

    print(
        f"overshoot ordering: backstepping wins {outcome.overshoot_win_fraction:.0%} of cells "
        f"(need {outcome.min_fraction:.0%})"
    )
    for noise, fraction in outcome.settling_fraction.items():
        print(f"backstepping settled on all channels: {noise} {fraction:.0%}")
    if not outcome.passed:
        print("acceptance: FAIL", file=sys.stderr)
        return EXIT_ACCEPTANCE
    print("acceptance: PASS")
    return EXIT_OK


def cmd_noise(args: argparse.Namespace, config: ExperimentConfig, output_dir: Path) -> int:
    color = config.noise.resolve_color()
    if color is None:
        print("config error: the noise command needs a noise color, not 'none'", file=sys.stderr)
        return EXIT_CONFIG

    seed = config.run.seeds[0]
    spectrum = config.spectrum
    spec = config.noise.spec(color, seed=derive_seed(seed, 0))
    samples = NoiseStream(spec).take(spectrum.samples)
    sample_time = spec.sample_time

    directory = output_dir / "noise"
    write_csv(
        directory / "samples.csv",
        ("k", "t", "value"),
        (
            (str(k), _fmt(k * sample_time), _fmt(float(value)))
            for k, value in enumerate(samples.tolist())
        ),
    )
    freqs, power = welch_psd(samples, sample_time, nperseg=spectrum.nperseg)
    write_csv(
        directory / "psd.csv",
        ("f_hz", "psd"),
        ((_fmt(f), _fmt(pxx)) for f, pxx in zip(freqs.tolist(), power.tolist(), strict=True)),
    )

    try:
        slope = psd_slope(
            samples,
            sample_time,
            spectrum.f_lo,
            spectrum.f_hi,
            nperseg=spectrum.nperseg,
        )
    except BandError as exc:
        print(f"run error: noise={color.value} seed={seed}: {exc}", file=sys.stderr)
        return EXIT_RUN

    target = target_slope(color)
    passed = abs(slope - target) <= SLOPE_TOLERANCE_DB
    save_summary(
        {
            "run_type": "noise",
            "color": color.value,
            "seed": seed,
            "samples": spectrum.samples,
            "band_hz": [spectrum.f_lo, spectrum.f_hi],
            "slope_db_per_decade": slope,
            "target_db_per_decade": target,
            "tolerance_db": SLOPE_TOLERANCE_DB,
            "passed": passed,
            "config_hash": _config_hash(config),
        },
        directory / "summary.json",
    )
    if args.plots:
        _try_plot(
            plot_noise_psd,
            freqs,
            power,
            directory / f"psd-{color.value}.png",
            band=(spectrum.f_lo, spectrum.f_hi),
            label=f"{color.value}: {slope:+.2f} dB/decade",
        )

    verdict = "pass" if passed else "FAIL"
    print(
        f"{color.value}: slope {slope:+.2f} dB/decade, "
        f"target {target:+.0f} +/- {SLOPE_TOLERANCE_DB:g}: {verdict}"
    )
    return EXIT_OK if passed else EXIT_ACCEPTANCE


def _run_logger(config: ExperimentConfig, output_dir: Path, command: str) -> RunLogger:
    return RunLogger(
        output_dir,
        run_metadata={
            "command": command,
            "config_hash": _config_hash(config),
            "seeds": list(config.run.seeds),
        },
    )


def _config_hash(config: ExperimentConfig) -> str:
    return hash_text(resolved_config_text(config))


def _aggregate_rows(result: CompareResult) -> list[list[str]]:
    return table_rows(result.aggregate, CONTROLLER_NAMES, result.noise, result.band_pct)


def _report_failures(result: CompareResult) -> None:
    for record in result.failures:
        logger.warning(
            "run error: controller=%s noise=%s seed=%d: %s: %s",
            record.controller,
            record.noise,
            record.seed,
            record.error,
            record.message,
        )


def _plot_compare(config: ExperimentConfig, output_dir: Path, result: CompareResult) -> None:
    seed = result.seeds[0]
    paths = {
        controller: result.record(controller, seed).trace_path for controller in CONTROLLER_NAMES
    }
    _plot_traces(config, output_dir, paths, f"{result.noise}-seed{seed}")


def _plot_traces(
    config: ExperimentConfig,
    output_dir: Path,
    trace_paths: dict[str, str],
    stem: str,
) -> None:
    traces = {
        label: read_trace_csv(output_dir / path)
        for label, path in trace_paths.items()
        if path and (output_dir / path).exists()
    }
    if traces:
        _try_plot(
            plot_reference_tracking,
            traces,
            config.reference.to_signal(),
            output_dir / "plots" / f"{stem}.png",
            title=stem,
        )


def _try_plot(plot: Callable[..., Path], *args: Any, **kwargs: Any) -> None:
    """Figures are optional: a missing matplotlib only costs the PNGs."""
    try:
        plot(*args, **kwargs)
    except RuntimeError as exc:
        logger.warning("skipping plots: %s", exc)


def _fmt(value: float) -> str:
    return format(value, ".17g")


__all__ = [
    "EXIT_ACCEPTANCE",
    "EXIT_CONFIG",
    "EXIT_OK",
    "EXIT_RUN",
    "SLOPE_TOLERANCE_DB",
    "build_parser",
    "main",
    "resolve_config",
]


if __name__ == "__main__":
    raise SystemExit(main())
