"""Synthetic accelerometer traces with labelled shake bursts.

Each burst is a half-sine pulse ``amplitude * sin(pi * (t - start) / duration)``
on one axis, signed so that the detector's direction rule recovers the
labelled direction (right +x, left -x, down +y, up -y). Independent
zero-mean Gaussian noise is added to every axis of every sample from the
portable stream in :mod:`shakekit.rng`, three draws per sample in x, y, z
order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import rng
from .detector import Sensibility, ShakeDirection
from .errors import SpecError
from .samples import TraceDocument

DEFAULT_SEED = 20240417
DEFAULT_RATE = 50.0

_AXIS_SIGN = {
    ShakeDirection.RIGHT: (0, 1.0),
    ShakeDirection.LEFT: (0, -1.0),
    ShakeDirection.DOWN: (1, 1.0),
    ShakeDirection.UP: (1, -1.0),
}


@dataclass(frozen=True)
class LabeledBurst:
    start_t: float
    direction: ShakeDirection
    amplitude: float
    duration: float

    def __post_init__(self):
        direction = self.direction
        if isinstance(direction, str) and not isinstance(direction, ShakeDirection):
            try:
                direction = ShakeDirection.parse(direction)
            except ValueError as exc:
                raise SpecError(str(exc)) from None
            object.__setattr__(self, "direction", direction)
        if direction not in _AXIS_SIGN:
            raise SpecError(f"burst direction must be up/down/left/right, got {direction!r}")
        for name in ("start_t", "amplitude", "duration"):
            if not math.isfinite(getattr(self, name)):
                raise SpecError(f"burst {name} must be finite")
        if self.amplitude <= 0:
            raise SpecError(f"burst amplitude must be > 0, got {self.amplitude!r}")
        if self.duration <= 0:
            raise SpecError(f"burst duration must be > 0, got {self.duration!r}")

    @property
    def end_t(self) -> float:
        return self.start_t + self.duration


@dataclass(frozen=True)
class SynthSpec:
    total_duration: float
    sample_rate: float = DEFAULT_RATE
    noise_sigma: float = 0.0
    bursts: tuple[LabeledBurst, ...] = ()
    seed: int = DEFAULT_SEED
    name: str = "synthetic"

    def __post_init__(self):
        object.__setattr__(self, "bursts", tuple(self.bursts))
        if not (math.isfinite(self.total_duration) and self.total_duration >= 0):
            raise SpecError(f"total_duration must be finite and >= 0, got {self.total_duration!r}")
        if not (math.isfinite(self.sample_rate) and self.sample_rate > 0):
            raise SpecError(f"sample_rate must be finite and > 0, got {self.sample_rate!r}")
        if not (math.isfinite(self.noise_sigma) and self.noise_sigma >= 0):
            raise SpecError(f"noise_sigma must be finite and >= 0, got {self.noise_sigma!r}")
        try:
            rng.check_seed(self.seed)
        except (TypeError, ValueError) as exc:
            raise SpecError(str(exc)) from None
        prev = None
        for i, burst in enumerate(self.bursts):
            if burst.start_t < 0 or burst.end_t > self.total_duration:
                raise SpecError(f"burst {i} [{burst.start_t}, {burst.end_t}] outside [0, {self.total_duration}]")
            if prev is not None:
                if burst.start_t < prev.start_t:
                    raise SpecError(f"bursts not sorted by start_t at burst {i}")
                if burst.start_t < prev.end_t:
                    raise SpecError(f"burst {i} overlaps burst {i - 1}")
            prev = burst

    @property
    def sample_count(self) -> int:
        return sample_count(self.total_duration, self.sample_rate)


def sample_count(total_duration: float, rate: float) -> int:
    """``floor(total_duration * rate) + 1``, snapping products within 1e-9 of an integer."""
    x = total_duration * rate
    nearest = round(x)
    if abs(x - nearest) <= 1e-9 * max(1.0, abs(x)):
        return int(nearest) + 1
    return math.floor(x) + 1


def generate_trace(spec: SynthSpec) -> tuple[TraceDocument, list[LabeledBurst]]:
    n = spec.sample_count
    t = np.arange(n, dtype=np.float64) / spec.sample_rate
    axes = np.zeros((3, n))
    for burst in spec.bursts:
        axis, sign = _AXIS_SIGN[burst.direction]
        lo = np.searchsorted(t, burst.start_t, side="left")
        hi = np.searchsorted(t, burst.end_t, side="right")
        phase = (t[lo:hi] - burst.start_t) / burst.duration
        axes[axis, lo:hi] += sign * burst.amplitude * np.sin(np.pi * phase)
    if spec.noise_sigma > 0:
        noise = rng.normals(spec.seed, 3 * n).reshape(n, 3).T
        axes += spec.noise_sigma * noise
    doc = TraceDocument(t, axes[0], axes[1], axes[2], source="synthetic")
    return doc, list(spec.bursts)


def burst_train(
    count: int,
    *,
    first_start: float,
    spacing: float,
    amplitude: float,
    duration: float,
    directions=(ShakeDirection.RIGHT, ShakeDirection.LEFT, ShakeDirection.DOWN, ShakeDirection.UP),
) -> tuple[LabeledBurst, ...]:
    """``count`` evenly spaced bursts cycling through ``directions``.

    Start times are rounded to the 6-decimal label format so that labels
    survive a write/read cycle unchanged.
    """
    return tuple(
        LabeledBurst(round(first_start + k * spacing, 6), directions[k % len(directions)], amplitude, duration)
        for k in range(count)
    )


# Corpus bursts start 5 ms after a 50 Hz sample instant. With a 60 ms
# half-sine, the sample 15 ms in sits at sin(pi/4) of the peak, so a 1.5 g
# burst crosses 1.0 g there (latency under one sample period).
CLEAN_BURSTS = dict(first_start=1.005, spacing=2.0, amplitude=1.5, duration=0.06)


def corpus_specs(seed: int = DEFAULT_SEED) -> list[SynthSpec]:
    normal = Sensibility.NORMAL.threshold
    clean = burst_train(10, **CLEAN_BURSTS)
    near = burst_train(10, first_start=1.0, spacing=2.0, amplitude=1.05 * normal, duration=0.2)
    return [
        SynthSpec(21.0, DEFAULT_RATE, 0.0, clean, seed, name="clean"),
        SynthSpec(21.0, DEFAULT_RATE, 0.1, clean, seed, name="noisy"),
        SynthSpec(9999 / DEFAULT_RATE, DEFAULT_RATE, normal / 5, (), seed, name="pure_noise"),
        SynthSpec(21.0, DEFAULT_RATE, 0.0, near, seed, name="near_threshold"),
    ]


def standard_corpus(seed: int = DEFAULT_SEED) -> list[tuple[SynthSpec, TraceDocument, list[LabeledBurst]]]:
    """Fixed evaluation corpus: clean, noisy, pure noise and near-threshold traces."""
    out = []
    for spec in corpus_specs(seed):
        doc, labels = generate_trace(spec)
        out.append((spec, doc, labels))
    return out


def corpus_entry(name: str, seed: int = DEFAULT_SEED):
    for spec in corpus_specs(seed):
        if spec.name == name:
            return (spec, *generate_trace(spec))
    names = ", ".join(s.name for s in corpus_specs(seed))
    raise SpecError(f"unknown corpus trace {name!r} (expected one of: {names})")
