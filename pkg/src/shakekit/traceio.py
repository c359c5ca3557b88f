"""Text formats for traces (CSV), shake events and burst labels (JSONL).

Every number is written with six decimals and a '.' separator, so writers
are byte-deterministic. Readers never return a partial document: the first
bad line raises with its 1-based line number.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .detector import DetectorConfig, ShakeDirection, ShakeEvent
from .errors import FormatError, OrderingError, ParseError, ShakeKitError
from .samples import TraceDocument
from .synth import LabeledBurst

TRACE_HEADER = "t,ax,ay,az"


def fmt(x: float) -> str:
    return f"{x:.6f}"


def _text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"input is not UTF-8: {exc}") from None
    return data


def _lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _number(raw, line: int, name: str) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise ParseError(f"{name} must be a number, got {raw!r}", line=line)
    value = float(raw)
    if not math.isfinite(value):
        raise ParseError(f"{name} must be finite", line=line)
    return value


# -- traces -------------------------------------------------------------------


def parse_trace(data: bytes | str, source: str = "<stream>") -> TraceDocument:
    lines = _lines(_text(data))
    if not lines or lines[0] != TRACE_HEADER:
        got = lines[0] if lines else "<empty input>"
        raise FormatError(f"expected header {TRACE_HEADER!r}, got {got!r}", line=1)
    rows = lines[1:]
    cols = _fast_columns(rows)
    if cols is None:
        cols = _checked_columns(rows)
    return TraceDocument(cols[0], cols[1], cols[2], cols[3], source=source)


def _fast_columns(rows: list[str]) -> np.ndarray | None:
    """Bulk conversion for well-formed input; ``None`` sends the caller to the line-by-line path."""
    if not rows:
        return np.empty((4, 0))
    if any(row.count(",") != 3 for row in rows):
        return None
    fields = ",".join(rows).split(",")
    try:
        values = np.fromiter(map(float, fields), dtype=np.float64, count=len(fields))
    except ValueError:
        return None
    cols = values.reshape(len(rows), 4).T
    if not np.isfinite(cols).all() or not (np.diff(cols[0]) > 0).all():
        return None
    return np.ascontiguousarray(cols)


def _checked_columns(rows: list[str]) -> np.ndarray:
    cols = np.empty((4, len(rows)))
    prev_t = None
    for k, row in enumerate(rows):
        lineno = k + 2
        fields = row.split(",")
        if len(fields) != 4:
            raise ParseError(f"expected 4 columns, got {len(fields)}", line=lineno)
        for j, raw in enumerate(fields):
            try:
                value = float(raw)
            except ValueError:
                raise ParseError(f"non-numeric field {raw!r}", line=lineno) from None
            if not math.isfinite(value):
                raise ParseError(f"non-finite field {raw!r}", line=lineno)
            cols[j, k] = value
        t = cols[0, k]
        if prev_t is not None and not t > prev_t:
            raise OrderingError(f"t={t!r} does not exceed previous t={prev_t!r}", line=lineno)
        prev_t = t
    return cols


def write_trace(doc: TraceDocument) -> bytes:
    out = [TRACE_HEADER]
    for t, ax, ay, az in zip(doc.t.tolist(), doc.ax.tolist(), doc.ay.tolist(), doc.az.tolist()):
        out.append(f"{t:.6f},{ax:.6f},{ay:.6f},{az:.6f}")
    return ("\n".join(out) + "\n").encode("ascii")


# -- events -------------------------------------------------------------------


@dataclass
class EventDocument:
    events: list[ShakeEvent]
    config: Optional[DetectorConfig] = None

    def __post_init__(self):
        check_events(self.events, self.config)


def check_events(events: Iterable[ShakeEvent], config: DetectorConfig | None = None) -> None:
    prev = None
    for i, ev in enumerate(events):
        if prev is not None:
            if not ev.t > prev.t:
                raise OrderingError(f"event t={ev.t!r} does not exceed previous t={prev.t!r}", index=i)
            if config is not None and not ev.t - prev.t > config.delay:
                raise OrderingError(f"events {i - 1} and {i} closer than delay {config.delay}", index=i)
        prev = ev


def _record_line(fields: dict) -> str:
    parts = []
    for key, value in fields.items():
        rendered = json.dumps(value) if isinstance(value, str) else fmt(value)
        parts.append(f'"{key}": {rendered}')
    return "{" + ", ".join(parts) + "}"


def write_events(doc: EventDocument | Iterable[ShakeEvent]) -> bytes:
    events = doc.events if isinstance(doc, EventDocument) else list(doc)
    lines = [
        _record_line({"t": e.t, "direction": e.direction.value, "magnitude": e.magnitude, "ax": e.ax, "ay": e.ay})
        for e in events
    ]
    return "".join(line + "\n" for line in lines).encode("ascii")


def _json_records(text: str, keys: tuple[str, ...]):
    for k, raw in enumerate(_lines(text)):
        lineno = k + 1
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc.msg}", line=lineno) from None
        if not isinstance(obj, dict):
            raise ParseError("expected a JSON object", line=lineno)
        missing = [key for key in keys if key not in obj]
        if missing:
            raise ParseError(f"missing field(s) {', '.join(missing)}", line=lineno)
        extra = sorted(set(obj) - set(keys))
        if extra:
            raise ParseError(f"unexpected field(s) {', '.join(extra)}", line=lineno)
        yield lineno, obj


def _direction(raw, lineno: int) -> ShakeDirection:
    if not isinstance(raw, str):
        raise ParseError(f"direction must be a string, got {raw!r}", line=lineno)
    try:
        return ShakeDirection.parse(raw)
    except ValueError as exc:
        raise ParseError(str(exc), line=lineno) from None


def read_events(data: bytes | str, config: DetectorConfig | None = None) -> EventDocument:
    """Parse event JSONL. ``config`` is not stored in the file; pass it to
    attach it and to check the debounce spacing."""
    events = []
    for lineno, obj in _json_records(_text(data), ("t", "direction", "magnitude", "ax", "ay")):
        ev = ShakeEvent(
            t=_number(obj["t"], lineno, "t"),
            direction=_direction(obj["direction"], lineno),
            magnitude=_number(obj["magnitude"], lineno, "magnitude"),
            ax=_number(obj["ax"], lineno, "ax"),
            ay=_number(obj["ay"], lineno, "ay"),
        )
        if events and not ev.t > events[-1].t:
            raise OrderingError(f"event t={ev.t!r} does not exceed previous t={events[-1].t!r}", line=lineno)
        if events and config is not None and not ev.t - events[-1].t > config.delay:
            raise OrderingError(f"event closer than delay {config.delay} to previous", line=lineno)
        events.append(ev)
    return EventDocument(events, config)


# -- labels -------------------------------------------------------------------


def write_labels(labels: Iterable[LabeledBurst]) -> bytes:
    lines = [
        _record_line(
            {"start_t": b.start_t, "direction": b.direction.value, "amplitude": b.amplitude, "duration": b.duration}
        )
        for b in labels
    ]
    return "".join(line + "\n" for line in lines).encode("ascii")


def read_labels(data: bytes | str) -> list[LabeledBurst]:
    labels: list[LabeledBurst] = []
    for lineno, obj in _json_records(_text(data), ("start_t", "direction", "amplitude", "duration")):
        start = _number(obj["start_t"], lineno, "start_t")
        direction = _direction(obj["direction"], lineno)
        try:
            burst = LabeledBurst(
                start,
                direction,
                _number(obj["amplitude"], lineno, "amplitude"),
                _number(obj["duration"], lineno, "duration"),
            )
        except ShakeKitError as exc:
            raise ParseError(exc.message, line=lineno) from None
        if labels and not burst.start_t > labels[-1].start_t:
            raise OrderingError(
                f"start_t={burst.start_t!r} does not exceed previous {labels[-1].start_t!r}", line=lineno
            )
        labels.append(burst)
    return labels
