"""Detection throughput on a long synthetic trace, in samples per second.

    python scripts/benchmark_replay.py [--samples N] [--repeats K]
"""

import argparse
import time

from shakekit.detector import DetectorConfig, Sensibility, process_trace
from shakekit.synth import SynthSpec, burst_train, generate_trace
from shakekit.traceio import parse_trace, write_trace


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=1_000_000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rate = 50.0
    duration = (args.samples - 1) / rate
    n_bursts = max(1, int(duration // 20))
    bursts = burst_train(n_bursts, first_start=1.005, spacing=duration / n_bursts, amplitude=1.5, duration=0.06)
    doc, _ = generate_trace(SynthSpec(duration, rate, 0.24, bursts))
    cfg = DetectorConfig(Sensibility.NORMAL.threshold)

    best = min(_timed(lambda: process_trace(doc, cfg)) for _ in range(args.repeats))
    print(f"detect:        {len(doc) / best / 1e6:8.2f} M samples/s  ({len(doc)} samples)")

    text = write_trace(doc)
    parse = _timed(lambda: parse_trace(text))
    print(f"parse CSV:     {len(doc) / parse / 1e6:8.2f} M samples/s")


def _timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


if __name__ == "__main__":
    main()
