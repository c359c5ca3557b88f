"""Threshold-and-debounce shake detection with x/y direction classification.

A sample fires when ``max(|ax|, |ay|) > threshold`` and more than ``delay``
seconds have passed since the last emitted shake. Both comparisons are
strict. The first qualifying sample of a stream always fires.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import ConfigError, InvalidSampleError, OrderingError
from .samples import AccelSample, TraceDocument, as_columns

DEFAULT_DELAY = 0.5


class ShakeDirection(str, Enum):
    UP = "up"
    DOWN = "down"
    LEFT = "left"
    RIGHT = "right"
    UNKNOWN = "unknown"

    @classmethod
    def parse(cls, text: str) -> "ShakeDirection":
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"unknown direction {text!r}") from None


class Sensibility(Enum):
    """Named threshold presets, in g."""

    LIGHTEST = 0.6
    LIGHT = 0.9
    NORMAL = 1.2
    HARD = 1.5
    HARDEST = 1.8

    @property
    def threshold(self) -> float:
        return self.value

    @classmethod
    def from_name(cls, name: str) -> "Sensibility":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            names = ", ".join(s.name.lower() for s in cls)
            raise ConfigError(f"unknown sensibility {name!r} (expected one of: {names})") from None


@dataclass(frozen=True)
class DetectorConfig:
    threshold: float
    delay: float = DEFAULT_DELAY

    def __post_init__(self):
        if not (math.isfinite(self.threshold) and self.threshold > 0):
            raise ConfigError(f"threshold must be finite and > 0, got {self.threshold!r}")
        if not (math.isfinite(self.delay) and self.delay >= 0):
            raise ConfigError(f"delay must be finite and >= 0, got {self.delay!r}")

    @classmethod
    def from_sensibility(cls, sensibility: Sensibility | str, delay: float = DEFAULT_DELAY) -> "DetectorConfig":
        if isinstance(sensibility, str):
            sensibility = Sensibility.from_name(sensibility)
        return cls(sensibility.threshold, delay)


@dataclass(frozen=True)
class DetectorState:
    last_event_t: Optional[float] = None


@dataclass(frozen=True)
class ShakeEvent:
    t: float
    direction: ShakeDirection
    magnitude: float
    ax: float
    ay: float

    @property
    def coordinates(self) -> tuple[float, float]:
        return (self.ax, self.ay)


def classify_direction(ax: float, ay: float) -> ShakeDirection:
    """Dominant x/y axis and its sign. Exact ties give ``UNKNOWN``.

    Positive x is right, positive y is down.
    """
    if not (math.isfinite(ax) and math.isfinite(ay)):
        raise InvalidSampleError(f"non-finite coordinates ({ax!r}, {ay!r})")
    abs_x, abs_y = abs(ax), abs(ay)
    if abs_x > abs_y:
        return ShakeDirection.RIGHT if ax > 0 else ShakeDirection.LEFT
    if abs_x < abs_y:
        return ShakeDirection.DOWN if ay > 0 else ShakeDirection.UP
    return ShakeDirection.UNKNOWN


def shake_predicate(sample: AccelSample, threshold: float) -> bool:
    return max(abs(sample.ax), abs(sample.ay)) > threshold


def detect_step(
    state: DetectorState, sample: AccelSample, config: DetectorConfig
) -> tuple[DetectorState, Optional[ShakeEvent]]:
    """Advance the detector by one sample.

    Only ``last_event_t`` is kept, so ordering can be checked here against the
    last emitted event; :class:`ShakeDetector` and :func:`process_trace` check
    it against every sample.
    """
    last = state.last_event_t
    if last is not None and not sample.t > last:
        raise OrderingError(f"t={sample.t!r} is not after last shake at t={last!r}")
    magnitude = max(abs(sample.ax), abs(sample.ay))
    if magnitude > config.threshold and (last is None or sample.t - last > config.delay):
        event = ShakeEvent(
            t=sample.t,
            direction=classify_direction(sample.ax, sample.ay),
            magnitude=magnitude,
            ax=sample.ax,
            ay=sample.ay,
        )
        return replace(state, last_event_t=sample.t), event
    return state, None


def process_trace(
    samples: TraceDocument | Sequence[AccelSample], config: DetectorConfig
) -> list[ShakeEvent]:
    """Fold :func:`detect_step` over a trace, starting from the empty state.

    Samples below threshold never change the state, so only the ones that
    pass the vectorised magnitude test are stepped through.
    """
    t, ax, ay, az = as_columns(samples)
    peak = np.maximum(np.abs(ax), np.abs(ay))
    idx = np.flatnonzero(peak > config.threshold)
    state = DetectorState()
    events = []
    rows = zip(t[idx].tolist(), ax[idx].tolist(), ay[idx].tolist(), az[idx].tolist())
    for row in rows:
        state, event = detect_step(state, AccelSample(*row), config)
        if event is not None:
            events.append(event)
    return events


ShakeCallback = Callable[[ShakeEvent], None]


class ShakeDetector:
    """Stateful streaming wrapper around :func:`detect_step`.

    Feed samples in time order; each detected shake is returned and passed to
    ``on_shake`` if given. One writer per instance.
    """

    def __init__(self, config: DetectorConfig, on_shake: ShakeCallback | None = None):
        self.config = config
        self.on_shake = on_shake
        self.state = DetectorState()
        self.samples_seen = 0
        self._last_t: float | None = None

    def feed(self, sample: AccelSample) -> ShakeEvent | None:
        if self._last_t is not None and not sample.t > self._last_t:
            raise OrderingError(
                f"t={sample.t!r} does not exceed previous t={self._last_t!r}", index=self.samples_seen
            )
        self.state, event = detect_step(self.state, sample, self.config)
        self._last_t = sample.t
        self.samples_seen += 1
        if event is not None and self.on_shake is not None:
            self.on_shake(event)
        return event

    def feed_many(self, samples) -> list[ShakeEvent]:
        return [e for e in map(self.feed, samples) if e is not None]

    def reset(self) -> None:
        self.state = DetectorState()
        self.samples_seen = 0
        self._last_t = None
