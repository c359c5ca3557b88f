"""``shakekit`` command line: replay, generate, evaluate, sweep.

Exit codes: 0 success, 2 bad input or arguments, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import traceio
from .detector import DEFAULT_DELAY, DetectorConfig, Sensibility, process_trace
from .errors import ShakeKitError
from .evaluation import DEFAULT_TOLERANCE, match_events, sweep, write_sweep
from .synth import DEFAULT_RATE, DEFAULT_SEED, SynthSpec, corpus_entry, corpus_specs, generate_trace

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3


class InputError(Exception):
    pass


def _read(path: str) -> bytes:
    return Path(path).read_bytes()


def _write(path: str, data: bytes) -> None:
    Path(path).write_bytes(data)


def _float_list(text: str) -> list[float]:
    items = [s.strip() for s in text.split(",") if s.strip()]
    try:
        return [float(s) for s in items]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None


def _seed(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None


def run_replay(args) -> int:
    if args.sensibility is not None:
        config = DetectorConfig.from_sensibility(args.sensibility, args.delay)
    else:
        config = DetectorConfig(args.threshold, args.delay)
    doc = traceio.parse_trace(_read(args.input), source=args.input)
    events = process_trace(doc, config)
    _write(args.out, traceio.write_events(traceio.EventDocument(events, config)))
    print(f"samples={len(doc)} events={len(events)}")
    return EXIT_OK


def run_generate(args) -> int:
    if args.corpus is not None:
        spec, doc, labels = corpus_entry(args.corpus, args.seed)
    else:
        if args.duration is None:
            raise InputError("--duration is required unless --corpus is given")
        bursts = traceio.read_labels(_read(args.bursts)) if args.bursts else []
        spec = SynthSpec(args.duration, args.rate, args.noise, tuple(bursts), args.seed)
        doc, labels = generate_trace(spec)
    _write(args.out, traceio.write_trace(doc))
    _write(args.labels, traceio.write_labels(labels))
    print(f"samples={len(doc)} bursts={len(labels)}")
    return EXIT_OK


def run_evaluate(args) -> int:
    events = traceio.read_events(_read(args.events)).events
    labels = traceio.read_labels(_read(args.labels))
    report = match_events(events, labels, args.tolerance)
    print(json.dumps(report.to_dict()))
    return EXIT_OK


def run_sweep(args) -> int:
    doc = traceio.parse_trace(_read(args.input), source=args.input)
    labels = traceio.read_labels(_read(args.labels))
    cells = sweep(doc, labels, args.thresholds, args.delays, args.tolerance)
    _write(args.out, write_sweep(cells))
    print(f"cells={len(cells)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shakekit", description="Shake gesture detection toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("replay", help="run the detector over a trace CSV")
    p.add_argument("--input", required=True, metavar="T.csv")
    level = p.add_mutually_exclusive_group(required=True)
    level.add_argument("--threshold", type=float, metavar="G")
    level.add_argument("--sensibility", choices=[s.name.lower() for s in Sensibility])
    p.add_argument("--delay", type=float, default=DEFAULT_DELAY, metavar="S")
    p.add_argument("--out", required=True, metavar="E.jsonl")
    p.set_defaults(func=run_replay)

    p = sub.add_parser("generate", help="write a synthetic trace and its burst labels")
    p.add_argument("--duration", type=float, metavar="S")
    p.add_argument("--rate", type=float, default=DEFAULT_RATE, metavar="HZ")
    p.add_argument("--noise", type=float, default=0.0, metavar="G")
    p.add_argument("--bursts", metavar="SPEC.jsonl", help="bursts in label JSONL format")
    p.add_argument("--corpus", choices=[s.name for s in corpus_specs()], help="emit a standard corpus trace")
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED, metavar="N")
    p.add_argument("--out", required=True, metavar="T.csv")
    p.add_argument("--labels", required=True, metavar="L.jsonl")
    p.set_defaults(func=run_generate)

    p = sub.add_parser("evaluate", help="score events against labels")
    p.add_argument("--events", required=True, metavar="E.jsonl")
    p.add_argument("--labels", required=True, metavar="L.jsonl")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE, metavar="S")
    p.set_defaults(func=run_evaluate)

    p = sub.add_parser("sweep", help="evaluate a grid of thresholds and delays")
    p.add_argument("--input", required=True, metavar="T.csv")
    p.add_argument("--labels", required=True, metavar="L.jsonl")
    p.add_argument("--thresholds", required=True, type=_float_list, metavar="LIST")
    p.add_argument("--delays", required=True, type=_float_list, metavar="LIST")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE, metavar="S")
    p.add_argument("--out", required=True, metavar="R.csv")
    p.set_defaults(func=run_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 for --help.
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        return args.func(args)
    except (ShakeKitError, InputError) as exc:
        print(f"shakekit {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"shakekit {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
