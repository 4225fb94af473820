"""Time-stamped closed-loop traces and their CSV form."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import numpy.typing as npt

from phys_sims_quadrotor.model.state import STATE_FIELDS, FloatArray, RigidBodyState

CONTROL_FIELDS = ("U1", "U2", "U3", "U4")
SPEED_FIELDS = ("w1", "w2", "w3", "w4")
NOISE_FIELDS = ("n_z", "n_phi", "n_theta", "n_psi")
TRACE_COLUMNS = ("t", *STATE_FIELDS, *CONTROL_FIELDS, *SPEED_FIELDS, *NOISE_FIELDS, "clamped")


@dataclass(frozen=True, eq=False)
class Trace:
    """Row ``i`` holds the state at ``time[i]`` and the actuation applied from it.

    ``controls`` are post-saturation (rebuilt from the clamped ``speeds``) and
    ``noise`` is the held sample added to each measured output on that row.
    """

    time: FloatArray
    states: FloatArray
    controls: FloatArray
    speeds: FloatArray
    noise: FloatArray
    clamped: npt.NDArray[np.bool_]
    complete: bool = True

    def __post_init__(self) -> None:
        rows = self.time.shape[0]
        expected = {
            "states": (rows, len(STATE_FIELDS)),
            "controls": (rows, 4),
            "speeds": (rows, 4),
            "noise": (rows, 4),
            "clamped": (rows,),
        }
        for name, shape in expected.items():
            actual = getattr(self, name).shape
            if actual != shape:
                msg = f"trace {name} has shape {actual}, expected {shape}"
                raise ValueError(msg)

    def __len__(self) -> int:
        return int(self.time.shape[0])

    def channel(self, name: str) -> FloatArray:
        """Return one column by its CSV header name."""
        for fields, block in (
            (STATE_FIELDS, self.states),
            (CONTROL_FIELDS, self.controls),
            (SPEED_FIELDS, self.speeds),
            (NOISE_FIELDS, self.noise),
        ):
            if name in fields:
                column: FloatArray = block[:, fields.index(name)]
                return column
        if name == "t":
            return self.time
        msg = f"unknown trace column: {name}"
        raise KeyError(msg)

    def state_at(self, index: int) -> RigidBodyState:
        return RigidBodyState.from_array(self.states[index])

    def to_csv(self, path: str | Path) -> Path:
        """Write one row per step with 17 significant digits for exact round-trip."""
        destination = Path(path)
        destination.parent.mkdir(parents=True, exist_ok=True)
        with destination.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(TRACE_COLUMNS)
            for index in range(len(self)):
                values = np.concatenate(
                    (
                        self.time[index : index + 1],
                        self.states[index],
                        self.controls[index],
                        self.speeds[index],
                        self.noise[index],
                    )
                )
                row = [_format_float(value) for value in values.tolist()]
                row.append("1" if self.clamped[index] else "0")
                writer.writerow(row)
        return destination


def read_trace_csv(path: str | Path, *, complete: bool = True) -> Trace:
    source = Path(path)
    with source.open("r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = tuple(next(reader))
        if header != TRACE_COLUMNS:
            msg = f"{source}: unexpected trace header {header!r}"
            raise ValueError(msg)
        rows = [row for row in reader if row]

    numeric = np.array([[float(cell) for cell in row[:-1]] for row in rows], dtype=np.float64)
    numeric = numeric.reshape(len(rows), len(TRACE_COLUMNS) - 1)
    clamped = np.array([row[-1] == "1" for row in rows], dtype=np.bool_)
    states_end = 1 + len(STATE_FIELDS)
    return Trace(
        time=numeric[:, 0].copy(),
        states=numeric[:, 1:states_end].copy(),
        controls=numeric[:, states_end : states_end + 4].copy(),
        speeds=numeric[:, states_end + 4 : states_end + 8].copy(),
        noise=numeric[:, states_end + 8 : states_end + 12].copy(),
        clamped=clamped,
        complete=complete,
    )


def _format_float(value: float) -> str:
    return format(value, ".17g")


__all__ = [
    "CONTROL_FIELDS",
    "NOISE_FIELDS",
    "SPEED_FIELDS",
    "TRACE_COLUMNS",
    "Trace",
    "read_trace_csv",
]
