"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and the measured values they assert.  Everything is seeded; two runs
produce identical numbers.
"""

import math
import random
import time

import numpy as np
import pytest

from cuemark.attacks import remove_comments
from cuemark.cli import main as cli_main
from cuemark.corpus import (
    bundled_corpus_dir,
    bundled_prompts_dir,
    load_corpus_tokens,
    load_prompts,
)
from cuemark.cue_list import (
    CueDirection,
    build_cue_list,
    count_cooccurrence,
    entropy_percentile,
)
from cuemark.evaluation import auroc, fpr, run_condition, tpr
from cuemark.lm import train_ngram
from cuemark.tokenizer import PYTHON_LIKE, countable_texts, detokenize, render_token_texts, tokenize
from cuemark.watermark import (
    DetectionReport,
    Scheme,
    WatermarkConfig,
    detect,
    generate_watermarked,
    is_green,
    recompute_z,
)

KEY = bytes.fromhex("a1b2c3d4e5f6")
SEED = 42

# Harness constants, frozen: the templated shard drives power/ablation/
# robustness with a near-lossless model; the diverse shard drives null
# calibration, where text must not reuse token pairs enough for any single
# key's green-list draw to bias every document the same way.
MAIN_ORDER, MAIN_ALPHA, MAIN_PERCENTILE = 3, 1e-8, 85.0
NULL_ORDER, NULL_ALPHA = 2, 0.08


def report_line(name: str, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'}: {name} -- {detail}")
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="module")
def main_pipeline():
    sequences, fingerprint = load_corpus_tokens(bundled_corpus_dir("train"))
    model = train_ngram(sequences, order=MAIN_ORDER, alpha=MAIN_ALPHA)
    pc = count_cooccurrence(sequences, fingerprint=fingerprint)
    cues = build_cue_list(pc, entropy_percentile(pc, MAIN_PERCENTILE))
    prompts = load_prompts(bundled_prompts_dir())
    return model, cues, prompts


@pytest.fixture(scope="module")
def null_pipeline():
    sequences, _ = load_corpus_tokens(bundled_corpus_dir("diverse"))
    model = train_ngram(sequences, order=NULL_ORDER, alpha=NULL_ALPHA)
    texts = countable_texts(sequences[0])
    prompts = [texts[i:i + 12] for i in range(0, 1600, 100)]
    return model, prompts


def make_cfg(scheme, delta=4.0, gamma=0.5):
    return WatermarkConfig(scheme=scheme, key=KEY, gamma=gamma, delta=delta)


def test_z_formula_oracle():
    start = time.perf_counter()
    rng = random.Random(1234)
    worst = 0.0
    for _ in range(1000):
        t = rng.randrange(1, 5000)
        hits = rng.randrange(0, t + 1)
        gamma = rng.uniform(0.05, 0.95)
        # independent implementation of the one-proportion z statistic
        expected = (hits - gamma * t) / math.sqrt(t * gamma * (1.0 - gamma))
        report = DetectionReport(
            scheme=Scheme.KGW, gamma=gamma, z_threshold=2.0, t=t, green_hits=hits,
            weighted_t=float(t), weighted_hits=float(hits), weighted_sq=float(t),
            z=expected, verdict=expected > 2.0,
        )
        worst = max(worst, abs(recompute_z(report) - expected))
    elapsed = time.perf_counter() - start
    report_line(
        "z-formula oracle",
        worst <= 1e-12 and elapsed < 1.0,
        f"max |dz|={worst:.2e} over 1000 triples in {elapsed:.2f}s",
    )


def test_z_formula_against_detect(main_pipeline):
    model, cues, prompts = main_pipeline
    cfg = make_cfg(Scheme.KGW)
    emitted = generate_watermarked(
        model, prompts[0], cfg, cues, rng=np.random.default_rng(SEED), max_tokens=200
    )
    rep = detect(tokenize(render_token_texts(emitted), PYTHON_LIKE), cfg, cues)
    expected = (rep.green_hits - cfg.gamma * rep.t) / math.sqrt(
        rep.t * cfg.gamma * (1 - cfg.gamma)
    )
    report_line(
        "z-formula matches detect output",
        abs(rep.z - expected) <= 1e-12,
        f"|dz|={abs(rep.z - expected):.2e} at T={rep.t}",
    )


def test_cue_list_oracle():
    start = time.perf_counter()
    rng = random.Random(77)
    for trial in range(20):
        seqs = [
            [rng.choice("abcdefghijkl") for _ in range(rng.randrange(1, 500))]
            for _ in range(rng.randrange(1, 4))
        ]
        pc = count_cooccurrence(seqs)
        beta = rng.uniform(0.0, 2.5)
        direction = rng.choice(list(CueDirection))
        got = build_cue_list(pc, beta, direction).members

        counts, totals = {}, {}
        for seq in seqs:
            for a, b in zip(seq, seq[1:]):
                counts[(a, b)] = counts.get((a, b), 0) + 1
                totals[a] = totals.get(a, 0) + 1
        expected = set()
        for tok, total in totals.items():
            h = -sum(
                (n / total) * math.log(n / total)
                for (a, _), n in counts.items()
                if a == tok
            )
            keep = h >= beta if direction is CueDirection.HIGH_ENTROPY else h < beta
            if keep:
                expected.add(tok)
        assert got == frozenset(expected), f"trial {trial} mismatch"
    elapsed = time.perf_counter() - start
    report_line("cue-list oracle", elapsed < 5.0, f"20 corpora recomputed in {elapsed:.2f}s")


def test_hash_balance():
    start = time.perf_counter()
    rng = random.Random(2024)
    draws = []
    for _ in range(100_000):
        key = rng.getrandbits(64).to_bytes(8, "big")
        context = [
            "w%d" % rng.getrandbits(20) for _ in range(rng.randrange(0, 3))
        ]
        candidate = "t%d" % rng.getrandbits(24)
        draws.append((key, context, candidate))
    results = {}
    for gamma in (0.5, 0.25):
        hits = sum(is_green(k, c, w, gamma) for k, c, w in draws)
        results[gamma] = hits / len(draws)
    elapsed = time.perf_counter() - start
    ok = (
        abs(results[0.5] - 0.5) <= 0.01
        and abs(results[0.25] - 0.25) <= 0.01
        and elapsed < 5.0
    )
    report_line(
        "hash balance",
        ok,
        f"gamma 0.5 -> {results[0.5]:.4f}, gamma 0.25 -> {results[0.25]:.4f} in {elapsed:.1f}s",
    )


def test_null_calibration(null_pipeline):
    start = time.perf_counter()
    model, prompts = null_pipeline
    cfg = make_cfg(Scheme.KGW, delta=0.0)
    ts = run_condition(
        prompts, model, cfg, None,
        n_docs=500, seed=SEED, max_tokens=260, min_scoreable=201,
    )
    zs = np.array(ts.raw_scores)
    mean, std = float(zs.mean()), float(zs.std(ddof=1))
    fp_rate = float(np.mean(zs > 2.0))
    elapsed = time.perf_counter() - start
    ok = -0.1 <= mean <= 0.1 and 0.85 <= std <= 1.15 and fp_rate <= 0.05 and elapsed < 120
    report_line(
        "null calibration",
        ok,
        f"mean={mean:+.4f} std={std:.4f} fpr@2={fp_rate:.4f} "
        f"(500 docs, minT={min(ts.raw_scope)}) in {elapsed:.0f}s",
    )


def test_detection_power(main_pipeline):
    start = time.perf_counter()
    model, cues, prompts = main_pipeline
    kgw = run_condition(
        prompts, model, make_cfg(Scheme.KGW), cues, n_docs=200, seed=SEED, max_tokens=300
    )
    kgw_auroc = auroc(kgw)
    cue = run_condition(
        prompts, model, make_cfg(Scheme.CUE), cues, n_docs=200, seed=SEED, max_tokens=300
    )
    marked = [z for z, t in zip(cue.marked_scores, cue.marked_scope) if t >= 50]
    raw = [z for z, t in zip(cue.raw_scores, cue.raw_scope) if t >= 50]
    cue_auroc = auroc(marked, raw)
    elapsed = time.perf_counter() - start
    ok = kgw_auroc >= 0.95 and cue_auroc >= 0.90 and elapsed < 300
    report_line(
        "detection power",
        ok,
        f"KGW auroc={kgw_auroc:.4f} (>=0.95), cue auroc={cue_auroc:.4f} (>=0.90, "
        f"{len(marked)}/200 docs with T>=50) in {elapsed:.0f}s",
    )


def test_delta_monotonicity(main_pipeline):
    model, cues, prompts = main_pipeline
    results = {}
    for scheme in (Scheme.KGW, Scheme.CUE):
        tprs = []
        for delta in (0.0, 2.0, 4.0):
            ts = run_condition(
                prompts, model, make_cfg(scheme, delta=delta), cues,
                n_docs=80, seed=SEED, max_tokens=300,
            )
            tprs.append(tpr(ts, 2.0))
        results[scheme] = tprs
    ok = all(
        a <= b for tprs in results.values() for a, b in zip(tprs, tprs[1:])
    )
    report_line(
        "delta monotonicity",
        ok,
        " ".join(
            f"{s.value}: {', '.join(f'{v:.3f}' for v in tprs)}"
            for s, tprs in results.items()
        ),
    )


def test_comment_removal_robustness(main_pipeline):
    start = time.perf_counter()
    model, cues, prompts = main_pipeline
    aurocs = {}
    for scheme in (Scheme.KGW, Scheme.CUE):
        for condition, kwargs in (
            ("clean", {}),
            ("code-only", {"scope": "code-only"}),
            ("attacked", {"attack": remove_comments}),
        ):
            ts = run_condition(
                prompts, model, make_cfg(scheme), cues,
                n_docs=120, seed=SEED, max_tokens=300,
                condition=condition, **kwargs,
            )
            aurocs[(scheme, condition)] = auroc(ts)
    kgw_drop = aurocs[(Scheme.KGW, "clean")] - aurocs[(Scheme.KGW, "attacked")]
    cue_drop = aurocs[(Scheme.CUE, "clean")] - aurocs[(Scheme.CUE, "attacked")]
    floor = aurocs[(Scheme.CUE, "code-only")] - 0.05
    elapsed = time.perf_counter() - start
    ok = kgw_drop > cue_drop and aurocs[(Scheme.CUE, "attacked")] >= floor
    report_line(
        "comment-removal robustness",
        ok,
        f"KGW clean={aurocs[(Scheme.KGW, 'clean')]:.4f} attacked={aurocs[(Scheme.KGW, 'attacked')]:.4f} "
        f"(drop {kgw_drop:.4f}); cue clean={aurocs[(Scheme.CUE, 'clean')]:.4f} "
        f"attacked={aurocs[(Scheme.CUE, 'attacked')]:.4f} (drop {cue_drop:.4f}); "
        f"cue code-only={aurocs[(Scheme.CUE, 'code-only')]:.4f}; {elapsed:.0f}s",
    )


def test_auroc_dual_computation():
    rng = random.Random(5)
    worst = 0.0
    from cuemark.evaluation import _auroc_rank, _auroc_sweep

    for _ in range(200):
        marked = [rng.randrange(8) + rng.choice([0.0, rng.random()]) for _ in range(rng.randrange(1, 60))]
        raw = [rng.randrange(8) + rng.choice([0.0, rng.random()]) for _ in range(rng.randrange(1, 60))]
        worst = max(worst, abs(_auroc_rank(marked, raw) - _auroc_sweep(marked, raw)))
    fixed = (
        auroc([2.0, 3.0], [0.0, 1.0]),
        auroc([1.0, 2.0], [1.0, 2.0]),
        auroc([2.0, 3.0], [1.0, 2.0]),
    )
    ok = worst <= 1e-9 and fixed == (1.0, 0.5, 0.875)
    report_line(
        "auroc dual computation",
        ok,
        f"max rank/sweep gap={worst:.2e}; fixed cases={fixed}",
    )


def test_tokenizer_losslessness():
    start = time.perf_counter()
    files = sorted(bundled_corpus_dir("train").glob("*.py"))
    files += sorted(bundled_corpus_dir("heldout").glob("*.py"))
    files += sorted(bundled_corpus_dir("diverse").glob("*.py"))
    assert files
    corpus_ok = all(
        detokenize(tokenize(f.read_text(encoding="utf-8"), PYTHON_LIKE))
        == f.read_text(encoding="utf-8")
        for f in files
    )
    rng = random.Random(99)
    fail = 0
    for _ in range(10_000):
        chars = []
        for _ in range(rng.randrange(0, 60)):
            cp = rng.randrange(0x110000)
            while 0xD800 <= cp <= 0xDFFF:
                cp = rng.randrange(0x110000)
            chars.append(chr(cp))
        s = "".join(chars)
        if detokenize(tokenize(s, PYTHON_LIKE)) != s:
            fail += 1
    elapsed = time.perf_counter() - start
    report_line(
        "tokenizer losslessness",
        corpus_ok and fail == 0,
        f"{len(files)} corpus files + 10^4 random strings, {fail} failures in {elapsed:.1f}s",
    )


def test_end_to_end_determinism(tmp_path):
    args = [
        "evaluate",
        "--corpus", str(bundled_corpus_dir("train")),
        "--key", KEY.hex(),
        "--schemes", "kgw,cue",
        "--deltas", "0,4",
        "--conditions", "clean,comment-removed",
        "--n-docs", "4",
        "--max-tokens", "60",
        "--seed", str(SEED),
        "--beta-percentile", str(MAIN_PERCENTILE),
    ]
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert cli_main(args + ["--out", str(out1)]) == 0
    assert cli_main(args + ["--out", str(out2)]) == 0
    identical = out1.read_bytes() == out2.read_bytes()
    manifests_identical = (
        (tmp_path / "r1.json.manifest.json").read_text().replace("r1", "rX")
        == (tmp_path / "r2.json.manifest.json").read_text().replace("r2", "rX")
    )
    report_line(
        "end-to-end determinism",
        identical and manifests_identical,
        f"reports byte-identical={identical}, manifests match={manifests_identical}",
    )
