"""Accelerometer samples and whole traces.

A trace is stored column-wise (one float64 array per field) so that the
detector can prefilter with numpy; ``AccelSample`` is the per-row view.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InvalidSampleError, OrderingError


@dataclass(frozen=True, slots=True)
class AccelSample:
    """One accelerometer reading. Time in seconds, accelerations in g."""

    t: float
    ax: float
    ay: float
    az: float = 0.0

    def __post_init__(self):
        if not (
            math.isfinite(self.t)
            and math.isfinite(self.ax)
            and math.isfinite(self.ay)
            and math.isfinite(self.az)
        ):
            raise InvalidSampleError(f"non-finite sample {self!r}")


def _column(values, name: str) -> np.ndarray:
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    return arr


def check_columns(t: np.ndarray, ax: np.ndarray, ay: np.ndarray, az: np.ndarray) -> None:
    """Raise on the first non-finite or out-of-order sample (0-based index)."""
    if not (len(t) == len(ax) == len(ay) == len(az)):
        raise ValueError("trace columns have different lengths")
    finite = np.isfinite(t) & np.isfinite(ax) & np.isfinite(ay) & np.isfinite(az)
    if not finite.all():
        i = int(np.argmin(finite))
        raise InvalidSampleError(
            f"non-finite value (t={t[i]!r}, ax={ax[i]!r}, ay={ay[i]!r}, az={az[i]!r})", index=i
        )
    if len(t) > 1:
        increasing = np.diff(t) > 0
        if not increasing.all():
            i = int(np.argmin(increasing)) + 1
            raise OrderingError(f"t={t[i]!r} does not exceed previous t={t[i - 1]!r}", index=i)


@dataclass(eq=False)
class TraceDocument:
    """A validated, strictly time-ordered trace plus its origin label."""

    t: np.ndarray
    ax: np.ndarray
    ay: np.ndarray
    az: np.ndarray
    source: str = "synthetic"

    def __post_init__(self):
        self.t = _column(self.t, "t")
        self.ax = _column(self.ax, "ax")
        self.ay = _column(self.ay, "ay")
        self.az = _column(self.az, "az")
        check_columns(self.t, self.ax, self.ay, self.az)

    @classmethod
    def empty(cls, source: str = "synthetic") -> "TraceDocument":
        return cls(np.empty(0), np.empty(0), np.empty(0), np.empty(0), source)

    @classmethod
    def from_samples(cls, samples: Iterable[AccelSample], source: str = "synthetic") -> "TraceDocument":
        rows = [(s.t, s.ax, s.ay, s.az) for s in samples]
        if not rows:
            return cls.empty(source)
        t, ax, ay, az = zip(*rows)
        return cls(np.array(t), np.array(ax), np.array(ay), np.array(az), source)

    def __len__(self) -> int:
        return len(self.t)

    def __iter__(self) -> Iterator[AccelSample]:
        for row in zip(self.t.tolist(), self.ax.tolist(), self.ay.tolist(), self.az.tolist()):
            yield AccelSample(*row)

    @property
    def samples(self) -> list[AccelSample]:
        return list(self)

    def with_az(self, az) -> "TraceDocument":
        """Copy of this trace with the z column replaced."""
        return TraceDocument(self.t.copy(), self.ax.copy(), self.ay.copy(), az, self.source)


def as_columns(samples: TraceDocument | Sequence[AccelSample]):
    """Return validated ``(t, ax, ay, az)`` float64 arrays for either input form."""
    if isinstance(samples, TraceDocument):
        return samples.t, samples.ax, samples.ay, samples.az
    doc = TraceDocument.from_samples(samples)
    return doc.t, doc.ax, doc.ay, doc.az
