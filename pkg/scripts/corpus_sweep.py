"""Write the standard corpus to disk and sweep threshold x delay over each trace.

    python scripts/corpus_sweep.py OUTDIR [--thresholds LIST] [--delays LIST]
"""

import argparse
from pathlib import Path

from shakekit.evaluation import sweep, write_sweep
from shakekit.synth import DEFAULT_SEED, standard_corpus
from shakekit.traceio import write_labels, write_trace


def floats(text):
    return [float(x) for x in text.split(",") if x.strip()]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("outdir", type=Path)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--thresholds", type=floats, default=floats("0.6,0.9,1.0,1.2,1.4,1.5,1.8"))
    parser.add_argument("--delays", type=floats, default=floats("0,0.1,0.25,0.5,1.0"))
    args = parser.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    for spec, doc, labels in standard_corpus(args.seed):
        (args.outdir / f"{spec.name}.csv").write_bytes(write_trace(doc))
        (args.outdir / f"{spec.name}.labels.jsonl").write_bytes(write_labels(labels))
        cells = sweep(doc, labels, args.thresholds, args.delays)
        (args.outdir / f"{spec.name}.sweep.csv").write_bytes(write_sweep(cells))
        best = max(cells, key=lambda c: (c.report.precision + c.report.recall, -c.threshold))
        print(f"{spec.name:<15} {len(doc):>6} samples  best theta={best.threshold} tau={best.delay} "
              f"P={best.report.precision:.2f} R={best.report.recall:.2f}")


if __name__ == "__main__":
    main()
