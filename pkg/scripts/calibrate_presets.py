"""Score every sensibility preset on the standard corpus.

    python scripts/calibrate_presets.py [--seed N] [--delay S]
"""

import argparse

from shakekit.detector import DEFAULT_DELAY, DetectorConfig, Sensibility, process_trace
from shakekit.evaluation import match_events
from shakekit.synth import DEFAULT_SEED, standard_corpus


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--delay", type=float, default=DEFAULT_DELAY)
    args = parser.parse_args()

    corpus = standard_corpus(args.seed)
    print(f"{'preset':<9} {'theta':>5}  " + "  ".join(f"{spec.name:>22}" for spec, _, _ in corpus))
    for preset in Sensibility:
        cfg = DetectorConfig.from_sensibility(preset, args.delay)
        cells = []
        for _, doc, labels in corpus:
            r = match_events(process_trace(doc, cfg), labels)
            cells.append(f"P={r.precision:.2f} R={r.recall:.2f} FP={r.false_positives:<3d}")
        print(f"{preset.name.lower():<9} {cfg.threshold:>5.2f}  " + "  ".join(f"{c:>22}" for c in cells))


if __name__ == "__main__":
    main()
