"""Deterministic per-run logging as JSONL and CSV."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from types import TracebackType
from typing import Any

from phys_sims_quadrotor.harness.records import RunRecord

_FIELDNAMES = [
    "controller",
    "noise",
    "seed",
    "band_pct",
    "status",
    "message",
    "rows",
    "trace",
    "metrics",
]


@dataclass
class RunLogger:
    """Append one record per run; no wall-clock fields so outputs stay reproducible."""

    output_dir: Path
    run_name: str = "runs"
    run_metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        self.jsonl_path = self.output_dir / f"{self.run_name}.jsonl"
        self.csv_path = self.output_dir / f"{self.run_name}.csv"
        self.metadata_path = self.output_dir / f"{self.run_name}.metadata.json"

        self.metadata_path.write_text(
            json.dumps(self.run_metadata, sort_keys=True, indent=2),
            encoding="utf-8",
        )

        self._jsonl = self.jsonl_path.open("w", encoding="utf-8")
        self._csv = self.csv_path.open("w", encoding="utf-8", newline="")
        self._writer = csv.DictWriter(self._csv, fieldnames=_FIELDNAMES, lineterminator="\n")
        self._writer.writeheader()

    def log_run(self, record: RunRecord) -> None:
        payload = record.to_dict()
        self._jsonl.write(json.dumps(payload, sort_keys=True) + "\n")
        self._jsonl.flush()

        csv_row = {**payload, "metrics": json.dumps(payload["metrics"], sort_keys=True)}
        self._writer.writerow(csv_row)
        self._csv.flush()

    def close(self) -> None:
        self._jsonl.close()
        self._csv.close()

    def __enter__(self) -> RunLogger:
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        self.close()


__all__ = ["RunLogger"]
