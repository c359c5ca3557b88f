"""Whole-trace reference detector used to cross-check :func:`process_trace`.

Works on the full candidate set at once: find every super-threshold sample,
accept the earliest, then jump to the first later candidate that is more
than ``delay`` after it, and repeat. Nothing from the streaming detector is
reused except :func:`classify_direction`.
"""

from __future__ import annotations

import numpy as np

from .detector import DetectorConfig, ShakeEvent, classify_direction
from .errors import InvalidSampleError, OrderingError
from .samples import TraceDocument


def _columns(samples):
    if isinstance(samples, TraceDocument):
        cols = [samples.t, samples.ax, samples.ay, samples.az]
    else:
        rows = [(s.t, s.ax, s.ay, s.az) for s in samples]
        cols = [np.array(c, dtype=float) for c in zip(*rows)] if rows else [np.empty(0)] * 4
    t, ax, ay, az = cols
    bad = ~(np.isfinite(t) & np.isfinite(ax) & np.isfinite(ay) & np.isfinite(az))
    if bad.any():
        raise InvalidSampleError("non-finite value", index=int(np.flatnonzero(bad)[0]))
    backwards = np.flatnonzero(t[1:] <= t[:-1])
    if backwards.size:
        raise OrderingError("timestamps not strictly increasing", index=int(backwards[0]) + 1)
    return t, ax, ay


def oracle_detect(samples, config: DetectorConfig) -> list[ShakeEvent]:
    t, ax, ay = _columns(samples)
    abs_x, abs_y = np.abs(ax), np.abs(ay)
    peak = np.where(abs_x >= abs_y, abs_x, abs_y)
    cand = np.flatnonzero(peak > config.threshold)
    cand_t = t[cand]

    accepted = []
    pos = 0
    while pos < cand.size:
        accepted.append(pos)
        # Earlier accepted events are further back in time than this one, so
        # the elapsed time from it is the binding constraint.
        elapsed = cand_t[pos + 1:] - cand_t[pos]
        free = np.flatnonzero(elapsed > config.delay)
        if free.size == 0:
            break
        pos = pos + 1 + int(free[0])

    events = []
    for k in accepted:
        i = cand[k]
        x, y = float(ax[i]), float(ay[i])
        events.append(ShakeEvent(float(t[i]), classify_direction(x, y), float(peak[i]), x, y))
    return events
