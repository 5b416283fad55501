import csv
import random

import numpy as np
import pytest
from scipy import stats

from cuemark.attacks import remove_comments
from cuemark.corpus import bundled_corpus_dir, bundled_prompts_dir, load_corpus_tokens, load_prompts
from cuemark.cue_list import build_cue_list, count_cooccurrence, entropy_percentile
from cuemark.evaluation import (
    EvalReport,
    TrialSet,
    ablation_sweep,
    auroc,
    fpr,
    read_report,
    run_condition,
    tpr,
    trial_row,
    write_report,
)
from cuemark.lm import train_ngram
from cuemark.watermark import Scheme, WatermarkConfig

KEY = b"\xaa\xbb\xcc"


@pytest.fixture(scope="module")
def pipeline():
    sequences, fingerprint = load_corpus_tokens(bundled_corpus_dir("train"))
    model = train_ngram(sequences, order=3, alpha=1e-8)
    pc = count_cooccurrence(sequences, fingerprint=fingerprint)
    cues = build_cue_list(pc, entropy_percentile(pc, 85))
    prompts = load_prompts(bundled_prompts_dir())
    return model, cues, prompts


def make_cfg(scheme=Scheme.KGW, delta=4.0):
    return WatermarkConfig(scheme=scheme, key=KEY, delta=delta)


def test_run_condition_single_doc(pipeline):
    model, cues, prompts = pipeline
    ts = run_condition(prompts, model, make_cfg(), cues, n_docs=1, seed=1, max_tokens=60)
    assert len(ts.marked_scores) == 1
    assert len(ts.raw_scores) == 1
    assert ts.condition == "clean"
    assert "key" not in ts.config_snapshot


def test_run_condition_deterministic(pipeline):
    model, cues, prompts = pipeline
    a = run_condition(prompts, model, make_cfg(), cues, n_docs=3, seed=7, max_tokens=60)
    b = run_condition(prompts, model, make_cfg(), cues, n_docs=3, seed=7, max_tokens=60)
    assert a == b


def test_run_condition_rejects_bad_args(pipeline):
    model, cues, prompts = pipeline
    with pytest.raises(ValueError):
        run_condition(prompts, model, make_cfg(), cues, n_docs=0)
    with pytest.raises(ValueError):
        run_condition(prompts, model, make_cfg(), cues, n_docs=1, scope="bogus")


def test_delta_zero_populations_indistinguishable(pipeline):
    model, cues, prompts = pipeline
    ts = run_condition(
        prompts, model, make_cfg(delta=0.0), cues, n_docs=60, seed=5, max_tokens=80
    )
    assert ts.marked_scores == ts.raw_scores  # identical seeds, no bias
    p = stats.ks_2samp(ts.marked_scores, ts.raw_scores).pvalue
    assert p > 0.01


def test_tpr_fpr_examples():
    ts = TrialSet("t", [1.0, 3.0, 5.0], [-1.0, 2.5])
    assert tpr(ts, 2.0) == pytest.approx(2 / 3)
    assert fpr(ts, 2.0) == 0.5
    assert tpr(TrialSet("t", [3.0, 4.0], [0.0]), 2.0) == 1.0
    assert tpr(TrialSet("t", [0.0, 1.0], [0.0]), 2.0) == 0.0
    assert fpr(TrialSet("t", [1.0], [0.0, 0.5]), 2.0) == 0.0
    assert fpr(TrialSet("t", [1.0], [3.0, 4.0]), 2.0) == 1.0
    with pytest.raises(ValueError):
        tpr(TrialSet("t", [], [1.0]), 2.0)
    with pytest.raises(ValueError):
        fpr(TrialSet("t", [1.0], []), 2.0)


def test_auroc_fixed_cases():
    assert auroc([2.0, 3.0], [0.0, 1.0]) == 1.0
    assert auroc([1.0, 2.0], [1.0, 2.0]) == 0.5
    assert auroc([2.0, 3.0], [1.0, 2.0]) == pytest.approx(0.875, abs=1e-12)
    with pytest.raises(ValueError):
        auroc([], [1.0])


def test_auroc_matches_sklearn_and_pair_enumeration():
    from sklearn.metrics import roc_auc_score

    rng = random.Random(13)
    for _ in range(30):
        marked = [rng.randrange(6) + rng.random() * rng.choice([0, 1]) for _ in range(rng.randrange(1, 40))]
        raw = [rng.randrange(6) + rng.random() * rng.choice([0, 1]) for _ in range(rng.randrange(1, 40))]
        got = auroc(marked, raw)
        labels = [1] * len(marked) + [0] * len(raw)
        assert got == pytest.approx(roc_auc_score(labels, marked + raw), abs=1e-9)
        pairs = sum(
            1.0 if m > r else 0.5 if m == r else 0.0 for m in marked for r in raw
        )
        assert got == pytest.approx(pairs / (len(marked) * len(raw)), abs=1e-12)


def test_auroc_bounds_random(pipeline):
    rng = np.random.default_rng(3)
    for _ in range(20):
        marked = rng.normal(1, 1, size=30).tolist()
        raw = rng.normal(0, 1, size=25).tolist()
        assert 0.0 <= auroc(marked, raw) <= 1.0


def test_ablation_sweep_shape_and_consistency(pipeline):
    model, cues, prompts = pipeline
    report = ablation_sweep(
        [0.0, 4.0], prompts, model, make_cfg(), cues,
        n_docs=4, seed=9, max_tokens=60,
    )
    assert [r["delta"] for r in report.rows] == [0.0, 4.0]
    row0 = report.rows[0]
    assert abs(row0["tpr"] - row0["fpr"]) < 0.5  # no watermark signal at delta 0

    ts = run_condition(
        prompts, model, make_cfg(delta=4.0), cues, n_docs=4, seed=9, max_tokens=60
    )
    assert report.rows[1]["tpr"] == tpr(ts, 2.0)
    assert report.rows[1]["auroc"] == auroc(ts)
    with pytest.raises(ValueError):
        ablation_sweep([], prompts, model, make_cfg(), cues)


def test_attack_condition_runs(pipeline):
    model, cues, prompts = pipeline
    ts = run_condition(
        prompts, model, make_cfg(), cues,
        attack=remove_comments, n_docs=2, seed=3, max_tokens=80,
        condition="comment-removed",
    )
    assert ts.condition == "comment-removed"
    assert len(ts.marked_scores) == 2


def test_report_round_trip(tmp_path, pipeline):
    model, cues, prompts = pipeline
    ts = run_condition(prompts, model, make_cfg(), cues, n_docs=3, seed=2, max_tokens=60)
    report = EvalReport(
        rows=[trial_row(ts, make_cfg(), 2.0)],
        metadata={"seed": 2, "corpus_fingerprint": "00ff"},
    )
    path = tmp_path / "report.json"
    write_report(report, path, "json")
    assert read_report(path) == report
    # identical bytes across writes
    first = path.read_bytes()
    write_report(report, path, "json")
    assert path.read_bytes() == first


def test_csv_report_shape(tmp_path, pipeline):
    model, cues, prompts = pipeline
    rows = []
    for scheme in (Scheme.KGW, Scheme.CUE):
        for delta in (0.0, 2.0, 4.0):
            cfg = make_cfg(scheme=scheme, delta=delta)
            ts = run_condition(prompts, model, cfg, cues, n_docs=2, seed=4, max_tokens=50)
            rows.append(trial_row(ts, cfg, 2.0))
    report = EvalReport(rows=rows, metadata={})
    path = tmp_path / "report.csv"
    write_report(report, path, "csv")
    with open(path) as fh:
        parsed = list(csv.DictReader(fh))
    assert len(parsed) == 6  # schemes x deltas, one condition
    assert {row["scheme"] for row in parsed} == {"kgw", "cue"}
    assert all(0.0 <= float(row["auroc"]) <= 1.0 for row in parsed)


def test_unknown_format_rejected(tmp_path):
    report = EvalReport(rows=[], metadata={})
    with pytest.raises(ValueError, match="unknown report format"):
        write_report(report, tmp_path / "x.bin", "parquet")


def test_min_scoreable_retries(pipeline):
    model, cues, prompts = pipeline
    ts = run_condition(
        prompts, model, make_cfg(), cues,
        n_docs=2, seed=11, max_tokens=120, min_scoreable=100,
    )
    assert all(t >= 60 for t in ts.marked_scope)
