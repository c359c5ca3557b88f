import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shakekit.detector import DetectorConfig, ShakeDirection, ShakeEvent, process_trace
from shakekit.errors import ConfigError, FormatError, OrderingError
from shakekit.evaluation import EvalReport, SweepCell, match_events, read_sweep, sweep, write_sweep
from shakekit.oracle import oracle_detect
from shakekit.samples import TraceDocument
from shakekit.synth import LabeledBurst, corpus_entry

D = ShakeDirection


def brute_match(events, labels, tol):
    """Literal greedy rule: each event, in order, takes the earliest open label whose window holds it."""
    used = set()
    pairs = []
    for ev in events:
        open_ = [j for j, b in enumerate(labels) if j not in used and b.start_t <= ev.t <= b.start_t + b.duration + tol]
        if open_:
            j = min(open_, key=lambda j: labels[j].start_t)
            used.add(j)
            pairs.append((ev, labels[j]))
    return pairs


def event(t, direction=D.RIGHT):
    return ShakeEvent(t, direction, 1.5, 1.5, 0.0)


def test_empty_convention():
    r = match_events([], [], 0.1)
    assert (r.true_positives, r.false_positives, r.false_negatives) == (0, 0, 0)
    assert r.precision == r.recall == r.direction_accuracy == 1.0
    assert r.mean_latency is None


def test_window_containment():
    r = match_events([event(0.55)], [LabeledBurst(0.5, D.RIGHT, 1.5, 0.2)], 0.1)
    assert r.true_positives == 1
    assert r.mean_latency == pytest.approx(0.05)


def test_window_edges():
    label = LabeledBurst(1.0, D.RIGHT, 1.5, 0.25)
    assert match_events([event(1.0)], [label], 0.25).true_positives == 1
    assert match_events([event(1.5)], [label], 0.25).true_positives == 1
    assert match_events([event(0.999)], [label], 0.25).false_positives == 1
    assert match_events([event(1.501)], [label], 0.25).false_negatives == 1


def test_one_to_one_and_direction_mismatch():
    labels = [LabeledBurst(1.0, D.UP, 1.5, 0.2), LabeledBurst(3.0, D.LEFT, 1.5, 0.2)]
    events = [event(1.05, D.UP), event(1.1, D.UP), event(3.05, D.RIGHT), event(9.0)]
    r = match_events(events, labels, 0.1)
    assert (r.true_positives, r.false_positives, r.false_negatives) == (2, 2, 0)
    assert r.precision == 0.5 and r.recall == 1.0
    assert r.direction_accuracy == 0.5


def test_unsorted_inputs_rejected():
    with pytest.raises(OrderingError):
        match_events([event(2.0), event(1.0)], [], 0.1)
    labels = [LabeledBurst(3.0, D.UP, 1, 0.1), LabeledBurst(1.0, D.UP, 1, 0.1)]
    with pytest.raises(OrderingError):
        match_events([], labels, 0.1)
    with pytest.raises(ConfigError):
        match_events([], [], -0.1)


def test_clean_corpus_pipeline():
    _, doc, labels = corpus_entry("clean")
    events = oracle_detect(doc, DetectorConfig(1.0, 0.5))
    r = match_events(events, labels, 0.1)
    assert r.precision == r.recall == r.direction_accuracy == 1.0


@st.composite
def matching_problems(draw):
    labels, t = [], 0.0
    for _ in range(draw(st.integers(0, 8))):
        t += draw(st.floats(0.0, 1.0))
        dur = draw(st.floats(0.05, 0.5))
        labels.append(LabeledBurst(t, draw(st.sampled_from(list(D)[:4])), 1.0, dur))
        t += dur
    times = sorted(draw(st.lists(st.floats(0.0, t + 1.0), max_size=12, unique=True)))
    events = [event(x, draw(st.sampled_from(list(D)))) for x in times]
    return events, labels, draw(st.floats(0.0, 0.3))


@settings(max_examples=200)
@given(matching_problems())
def test_matching_agrees_with_brute_force(problem):
    events, labels, tol = problem
    r = match_events(events, labels, tol)
    pairs = brute_match(events, labels, tol)
    assert r.true_positives == len(pairs)
    assert r.true_positives + r.false_positives == len(events)
    assert r.true_positives + r.false_negatives == len(labels)
    assert 0 <= r.precision <= 1 and 0 <= r.recall <= 1
    if pairs:
        assert r.mean_latency == pytest.approx(np.mean([e.t - b.start_t for e, b in pairs]))
        assert r.direction_accuracy == pytest.approx(np.mean([e.direction == b.direction for e, b in pairs]))


def test_report_unchanged_by_quiet_tail():
    _, doc, labels = corpus_entry("noisy")
    cfg = DetectorConfig(1.0, 0.5)
    base = match_events(process_trace(doc, cfg), labels, 0.1)
    tail_t = doc.t[-1] + np.arange(1, 201) * 0.02
    quiet = 0.3 * np.sin(np.arange(200))
    longer = TraceDocument(
        np.concatenate([doc.t, tail_t]),
        np.concatenate([doc.ax, quiet]),
        np.concatenate([doc.ay, -quiet]),
        np.concatenate([doc.az, quiet]),
    )
    assert match_events(process_trace(longer, cfg), labels, 0.1) == base


def test_degenerate_sweep_equals_direct_run():
    _, doc, labels = corpus_entry("noisy")
    (cell,) = sweep(doc, labels, [1.1], [0.4], 0.1)
    assert cell == SweepCell(1.1, 0.4, match_events(process_trace(doc, DetectorConfig(1.1, 0.4)), labels, 0.1))


def test_sweep_grid_matches_oracle_brute_force():
    _, doc, labels = corpus_entry("clean")
    thresholds = [0.2, 0.6, 1.0, 1.3, 1.44, 1.46, 1.5, 2.0]
    delays = [0.0, 0.5, 1.0, 1.9]
    cells = sweep(doc, labels, thresholds, delays, 0.1)
    assert [(c.threshold, c.delay) for c in cells] == [(th, d) for th in thresholds for d in delays]
    sampled_peak = max(np.abs(doc.ax).max(), np.abs(doc.ay).max())
    for c in cells:
        events = oracle_detect(doc, DetectorConfig(c.threshold, c.delay))
        pairs = brute_match(events, labels, 0.1)
        assert c.report.true_positives == len(pairs)
        assert c.report.false_positives == len(events) - len(pairs)
        if c.threshold < sampled_peak:
            assert c.report.recall == 1.0
        else:
            assert c.report.true_positives == 0
    assert write_sweep(cells) == write_sweep(sweep(doc, labels, thresholds, delays, 0.1))


def test_zero_delay_firing_sets_shrink_with_threshold():
    _, doc, labels = corpus_entry("noisy")
    thresholds = [0.1, 0.2, 0.3, 0.5, 0.8, 1.2]
    fired = [{e.t for e in process_trace(doc, DetectorConfig(th, 0.0))} for th in thresholds]
    assert all(hi <= lo for lo, hi in zip(fired, fired[1:]))
    cells = sweep(doc, labels, thresholds, [0.0], 0.1)
    counts = [c.report.true_positives + c.report.false_positives for c in cells]
    assert counts == [len(f) for f in fired]
    assert counts == sorted(counts, reverse=True)


@pytest.mark.parametrize("thresholds, delays", [([], [0.5]), ([1.0], []), ([0.0], [0.5]), ([1.0], [-1.0]), ([math.nan], [0.5])])
def test_invalid_grids(thresholds, delays):
    with pytest.raises(ConfigError):
        sweep(TraceDocument.empty(), [], thresholds, delays)


def test_sweep_csv_round_trip():
    _, doc, labels = corpus_entry("noisy")
    cells = sweep(doc, labels, [0.3, 1.0, 3.0], [0.0, 0.5], 0.1)
    text = write_sweep(cells)
    assert text.splitlines()[0] == b"threshold,delay,tp,fp,fn,precision,recall,mean_latency,direction_accuracy"
    back = read_sweep(text)
    assert write_sweep(back) == text
    assert [c.report.true_positives for c in back] == [c.report.true_positives for c in cells]
    assert any(c.report.mean_latency is None for c in back)
    with pytest.raises(FormatError):
        read_sweep(b"threshold,delay\n")


def test_report_dict_keys():
    assert list(EvalReport(0, 0, 0, 1.0, 1.0, None, 1.0).to_dict()) == [
        "true_positives",
        "false_positives",
        "false_negatives",
        "precision",
        "recall",
        "mean_latency",
        "direction_accuracy",
    ]
