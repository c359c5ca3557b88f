"""Scoring detected shakes against labelled bursts, and threshold/delay sweeps."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from .detector import DetectorConfig, ShakeEvent, process_trace
from .errors import ConfigError, FormatError, OrderingError, ParseError
from .samples import TraceDocument
from .synth import LabeledBurst

DEFAULT_TOLERANCE = 0.1

SWEEP_HEADER = "threshold,delay,tp,fp,fn,precision,recall,mean_latency,direction_accuracy"


@dataclass(frozen=True)
class EvalReport:
    true_positives: int
    false_positives: int
    false_negatives: int
    precision: float
    recall: float
    mean_latency: Optional[float]
    direction_accuracy: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SweepCell:
    threshold: float
    delay: float
    report: EvalReport


def _ratio(num: int, den: int) -> float:
    # Nothing to get wrong counts as perfect.
    return num / den if den else 1.0


def match_events(
    events: Sequence[ShakeEvent], labels: Sequence[LabeledBurst], tolerance: float = DEFAULT_TOLERANCE
) -> EvalReport:
    """Greedy one-to-one matching in event order.

    Each event takes the earliest still-unmatched label whose window
    ``[start_t, start_t + duration + tolerance]`` contains it. A detected
    shake with the wrong direction is still a true positive; it only lowers
    ``direction_accuracy``.
    """
    if not (math.isfinite(tolerance) and tolerance >= 0):
        raise ConfigError(f"tolerance must be finite and >= 0, got {tolerance!r}")
    for i in range(1, len(events)):
        if events[i].t < events[i - 1].t:
            raise OrderingError("events not sorted by t", index=i)
    for i in range(1, len(labels)):
        if labels[i].start_t < labels[i - 1].start_t:
            raise OrderingError("labels not sorted by start_t", index=i)

    matched = [False] * len(labels)
    first_open = 0
    latencies = []
    agree = 0
    for ev in events:
        while first_open < len(labels) and (
            matched[first_open] or labels[first_open].end_t + tolerance < ev.t
        ):
            first_open += 1
        for j in range(first_open, len(labels)):
            lab = labels[j]
            if lab.start_t > ev.t:
                break
            if not matched[j] and ev.t <= lab.end_t + tolerance:
                matched[j] = True
                latencies.append(ev.t - lab.start_t)
                agree += ev.direction == lab.direction
                break

    tp = len(latencies)
    fp = len(events) - tp
    fn = len(labels) - tp
    return EvalReport(
        true_positives=tp,
        false_positives=fp,
        false_negatives=fn,
        precision=_ratio(tp, tp + fp),
        recall=_ratio(tp, tp + fn),
        mean_latency=sum(latencies) / tp if tp else None,
        direction_accuracy=_ratio(agree, tp),
    )


def _check_grid(values: Sequence[float], name: str, allow_zero: bool) -> list[float]:
    values = [float(v) for v in values]
    if not values:
        raise ConfigError(f"{name} grid is empty")
    for v in values:
        if not math.isfinite(v) or v < 0 or (v == 0 and not allow_zero):
            raise ConfigError(f"invalid {name} value {v!r}")
    return values


def sweep(
    trace: TraceDocument,
    labels: Sequence[LabeledBurst],
    thresholds: Sequence[float],
    delays: Sequence[float],
    tolerance: float = DEFAULT_TOLERANCE,
) -> list[SweepCell]:
    """One cell per (threshold, delay), thresholds outermost."""
    thresholds = _check_grid(thresholds, "threshold", allow_zero=False)
    delays = _check_grid(delays, "delay", allow_zero=True)
    cells = []
    for th in thresholds:
        for d in delays:
            events = process_trace(trace, DetectorConfig(th, d))
            cells.append(SweepCell(th, d, match_events(events, labels, tolerance)))
    return cells


def write_sweep(cells: Sequence[SweepCell]) -> bytes:
    """Sweep CSV; an absent mean latency is an empty field."""
    lines = [SWEEP_HEADER]
    for c in cells:
        r = c.report
        latency = "" if r.mean_latency is None else f"{r.mean_latency:.6f}"
        lines.append(
            f"{c.threshold:.6f},{c.delay:.6f},{r.true_positives},{r.false_positives},"
            f"{r.false_negatives},{r.precision:.6f},{r.recall:.6f},{latency},{r.direction_accuracy:.6f}"
        )
    return ("\n".join(lines) + "\n").encode("ascii")


def read_sweep(data: bytes | str) -> list[SweepCell]:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != SWEEP_HEADER:
        raise FormatError(f"expected header {SWEEP_HEADER!r}", line=1)
    cells = []
    for k, row in enumerate(lines[1:]):
        lineno = k + 2
        f = row.split(",")
        if len(f) != 9:
            raise ParseError(f"expected 9 columns, got {len(f)}", line=lineno)
        try:
            report = EvalReport(
                true_positives=int(f[2]),
                false_positives=int(f[3]),
                false_negatives=int(f[4]),
                precision=float(f[5]),
                recall=float(f[6]),
                mean_latency=float(f[7]) if f[7] else None,
                direction_accuracy=float(f[8]),
            )
            cells.append(SweepCell(float(f[0]), float(f[1]), report))
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno) from None
    return cells
