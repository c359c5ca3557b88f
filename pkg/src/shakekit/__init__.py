"""Streaming shake-gesture detection over accelerometer traces."""

from .detector import (
    DEFAULT_DELAY,
    DetectorConfig,
    DetectorState,
    Sensibility,
    ShakeDetector,
    ShakeDirection,
    ShakeEvent,
    classify_direction,
    detect_step,
    process_trace,
    shake_predicate,
)
from .errors import (
    ConfigError,
    FormatError,
    InvalidSampleError,
    OrderingError,
    ParseError,
    ShakeKitError,
    SpecError,
)
from .evaluation import EvalReport, SweepCell, match_events, sweep
from .oracle import oracle_detect
from .samples import AccelSample, TraceDocument
from .synth import LabeledBurst, SynthSpec, generate_trace, standard_corpus

__version__ = "0.1.0"
