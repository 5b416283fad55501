import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuemark.cue_list import (
    CueDirection,
    CueList,
    build_cue_list,
    count_cooccurrence,
    entropy_percentile,
)
from cuemark.lm import EOS_TOKEN, Distribution, next_distribution, sample, train_ngram
from cuemark.tokenizer import PYTHON_LIKE, countable_texts, render_token_texts, tokenize
from cuemark.watermark import (
    DetectionReport,
    GreenLists,
    Scheme,
    WatermarkConfig,
    bias_distribution,
    detect,
    generate_watermarked,
    is_green,
    recompute_z,
    z_from_counts,
)

KEY = b"\x13\x37\xc0\xde"


def cfg_for(scheme, **kw):
    return WatermarkConfig(scheme=scheme, key=KEY, **kw)


# Golden vectors computed once with a standalone FNV-1a-64 implementation
# (offset 14695981039346656037, prime 1099511628211) and frozen here.
GOLDEN = [
    (b"k", ("a",), "b", True, 0.4717479600),
    (b"k", ("a",), "c", True, 0.4717480612),
    (b"\x00\xff", ("x", "y"), "z", False, 0.8691492130),
    (b"secret", (), "token", False, 0.7922787482),
]


@pytest.mark.parametrize("key,ctx,cand,expected,_u", GOLDEN)
def test_is_green_golden_vectors(key, ctx, cand, expected, _u):
    assert is_green(key, list(ctx), cand, 0.5) is expected
    # just below/above the recorded unit-interval value flips the verdict
    assert is_green(key, list(ctx), cand, _u + 1e-6)
    assert not is_green(key, list(ctx), cand, _u - 1e-6)


def test_is_green_deterministic():
    for _ in range(3):
        assert is_green(KEY, ["ctx"], "w", 0.3) == is_green(KEY, ["ctx"], "w", 0.3)


def test_green_fraction_tracks_gamma():
    rng = random.Random(0)
    for gamma in (0.5, 0.25):
        hits = 0
        n = 20_000
        for i in range(n):
            ctx = [f"c{rng.randrange(10_000)}"]
            hits += is_green(KEY, ctx, f"w{rng.randrange(10_000)}", gamma)
        assert abs(hits / n - gamma) < 0.015


def test_green_lists_match_is_green():
    support = tuple(sorted(f"tok{i}" for i in range(200)))
    greens = GreenLists(KEY, 0.4, support)
    for ctx in ((), ("a",), ("a", "b")):
        mask = greens.mask(ctx)
        for i, w in enumerate(support):
            assert bool(mask[i]) == is_green(KEY, list(ctx), w, 0.4)
        assert mask is greens.mask(ctx)  # cached


def test_bias_identity_at_zero_delta():
    d = Distribution(("a", "b"), np.array([0.5, 0.5]))
    assert bias_distribution(d, lambda w: w == "a", 0.0) is d


def test_bias_two_token_example():
    d = Distribution(("a", "b"), np.array([0.5, 0.5]))
    out = bias_distribution(d, lambda w: w == "a", math.log(3))
    assert out.probs[0] == pytest.approx(0.75, abs=1e-12)
    assert out.probs[1] == pytest.approx(0.25, abs=1e-12)


def test_bias_all_green_is_identity():
    d = Distribution(("a", "b", "c"), np.array([0.2, 0.3, 0.5]))
    out = bias_distribution(d, lambda w: True, 2.5)
    assert np.abs(out.probs - d.probs).max() < 1e-12


@settings(max_examples=100)
@given(
    st.lists(st.floats(0.01, 1.0), min_size=2, max_size=8),
    st.integers(0, 255),
    st.floats(0.0, 10.0),
)
def test_bias_preserves_order_within_color(weights, mask_bits, delta):
    probs = np.array(weights) / sum(weights)
    support = tuple(f"t{i}" for i in range(len(weights)))
    mask = np.array([(mask_bits >> i) & 1 == 1 for i in range(len(weights))])
    out = bias_distribution(Distribution(support, probs), mask, delta)
    assert abs(float(out.probs.sum()) - 1.0) < 1e-9
    for i in range(len(weights)):
        for j in range(len(weights)):
            if mask[i] == mask[j] and probs[i] > probs[j]:
                assert not (out.probs[i] < out.probs[j])


def diverse_model(order=2, alpha=0.5, n_types=20, length=400, seed=5):
    rng = random.Random(seed)
    seq = [f"w{rng.randrange(n_types)}" for _ in range(length)]
    return train_ngram([seq], order=order, alpha=alpha)


def plain_sampling(model, prompt, rng, max_tokens, temperature=1.0):
    context = list(prompt)
    out = []
    for _ in range(max_tokens):
        token = sample(next_distribution(model, context), rng, temperature)
        if token == EOS_TOKEN:
            break
        out.append(token)
        context.append(token)
    return out


def test_generate_delta_zero_equals_plain_sampling():
    model = diverse_model()
    prompt = ["w1", "w2"]
    for scheme in Scheme:
        cfg = cfg_for(scheme, delta=0.0)
        cl = CueList(frozenset(model.vocab), 0.0, CueDirection.HIGH_ENTROPY, 0)
        got = generate_watermarked(
            model, prompt, cfg, cl, rng=np.random.default_rng(99), max_tokens=60
        )
        want = plain_sampling(model, prompt, np.random.default_rng(99), 60)
        assert got == want


def test_generate_empty_cue_list_equals_plain_sampling():
    model = diverse_model()
    cfg = cfg_for(Scheme.CUE, delta=6.0)
    empty = CueList(frozenset(), 0.0, CueDirection.HIGH_ENTROPY, 0)
    got = generate_watermarked(
        model, ["w0"], cfg, empty, rng=np.random.default_rng(3), max_tokens=80
    )
    want = plain_sampling(model, ["w0"], np.random.default_rng(3), 80)
    assert got == want


def test_generate_requires_cue_list_and_positive_budget():
    model = diverse_model()
    with pytest.raises(ValueError, match="cue list"):
        generate_watermarked(
            model, [], cfg_for(Scheme.CUE), rng=np.random.default_rng(0), max_tokens=5
        )
    with pytest.raises(ValueError, match="max_tokens"):
        generate_watermarked(
            model, [], cfg_for(Scheme.KGW), rng=np.random.default_rng(0), max_tokens=0
        )


def test_kgw_high_delta_floods_green():
    model = diverse_model(n_types=30, length=1500, alpha=0.3)
    cfg = cfg_for(Scheme.KGW, delta=8.0)
    trace = []
    generate_watermarked(
        model,
        ["w0"],
        cfg,
        rng=np.random.default_rng(11),
        max_tokens=2000,
        trace=trace,
    )
    greens = [e["green"] for e in trace]
    assert len(greens) > 1000
    assert sum(greens) / len(greens) > 0.75


def test_z_direct_arithmetic():
    assert z_from_counts(50, 100, 100, 0.5) == 0.0
    assert z_from_counts(60, 100, 100, 0.5) == pytest.approx(2.0, abs=1e-12)


def synthetic_report(**kw):
    defaults = dict(
        scheme=Scheme.KGW, gamma=0.5, z_threshold=2.0, t=100, green_hits=60,
        weighted_t=100.0, weighted_hits=60.0, weighted_sq=100.0,
        z=z_from_counts(60.0, 100.0, 100.0, 0.5), verdict=True,
    )
    defaults.update(kw)
    return DetectionReport(**defaults)


def test_recompute_z_matches_and_detects_tampering():
    report = synthetic_report()
    assert recompute_z(report) == report.z
    tampered = synthetic_report(green_hits=70, weighted_hits=70.0)
    assert recompute_z(tampered) != report.z
    with pytest.raises(ValueError):
        recompute_z(synthetic_report(t=0))


def test_detect_insufficient_scope_on_empty_input():
    report = detect([], cfg_for(Scheme.KGW))
    assert report.t == 0
    assert report.z == 0.0
    assert report.verdict is False
    assert report.insufficient_scope


def test_detect_requires_model_for_entropy_schemes():
    toks = tokenize("a b c", PYTHON_LIKE)
    for scheme in (Scheme.SWEET, Scheme.EWD):
        with pytest.raises(ValueError, match="requires a model"):
            detect(toks, cfg_for(scheme))
    with pytest.raises(ValueError, match="cue list"):
        detect(toks, cfg_for(Scheme.CUE))


def corpus_model_and_cues():
    """Toy pipeline fixture: comment-rich corpus, order-3 model, p75 cues."""
    rng = random.Random(21)
    lines = []
    for i in range(260):
        w = rng.randrange(12)
        lines.append(f"# note {rng.randrange(40)} about part {rng.randrange(40)}")
        lines.append(f"v{w} = {rng.randrange(50)}")
        lines.append(f"use_{w} ( arg_{w} )")
    text = "\n".join(lines) + "\n"
    toks = tokenize(text, PYTHON_LIKE)
    model = train_ngram([toks], order=3, alpha=1e-4)
    pc = count_cooccurrence([toks])
    cues = build_cue_list(pc, entropy_percentile(pc, 75))
    prompt = countable_texts(toks[:40])
    return model, cues, prompt


@pytest.mark.parametrize("scheme", list(Scheme))
def test_injection_detection_agreement(scheme):
    model, cues, prompt = corpus_model_and_cues()
    cfg = cfg_for(scheme, delta=4.0)
    gen_trace = []
    emitted = generate_watermarked(
        model, prompt, cfg, cues,
        rng=np.random.default_rng(17), max_tokens=220, trace=gen_trace,
    )
    rendered = render_token_texts(emitted, PYTHON_LIKE)
    toks = tokenize(rendered, PYTHON_LIKE)
    report = detect(toks, cfg, cues, model, with_trace=True)
    stream = [e for e in report.trace]
    assert [t for t in countable_texts(toks)] == emitted

    # positions whose full hash/gate context lies inside the generated text
    start = max(1, model.order - 1) if scheme in (Scheme.SWEET, Scheme.EWD) else 1
    for gen in gen_trace[start:]:
        k = gen["index"]
        det = stream[k]
        assert det.green == gen["green"]
        if scheme is Scheme.CUE or scheme is Scheme.KGW:
            assert det.in_scope == (gen["gate"] if scheme is Scheme.CUE else True)
        elif scheme is Scheme.SWEET:
            assert det.in_scope == gen["gate"]


def test_detected_signal_and_null_separation():
    model, cues, prompt = corpus_model_and_cues()
    cfg = cfg_for(Scheme.CUE, delta=8.0)
    marked = generate_watermarked(
        model, prompt, cfg, cues, rng=np.random.default_rng(4), max_tokens=400
    )
    raw = plain_sampling(model, prompt, np.random.default_rng(4), 400)
    marked_toks = tokenize(render_token_texts(marked, PYTHON_LIKE), PYTHON_LIKE)
    raw_toks = tokenize(render_token_texts(raw, PYTHON_LIKE), PYTHON_LIKE)
    marked_report = detect(marked_toks, cfg, cues)
    raw_report = detect(raw_toks, cfg, cues)
    assert marked_report.t >= 50
    assert marked_report.z > 3.0
    assert abs(raw_report.z) < 3.5
    assert marked_report.verdict and not raw_report.verdict


def test_cue_with_full_vocabulary_degenerates_to_kgw():
    rng = random.Random(8)
    seq = [f"x{rng.randrange(15)}" for _ in range(300)]
    model = train_ngram([seq], order=2, alpha=0.4)
    full = CueList(frozenset(model.vocab), 0.0, CueDirection.HIGH_ENTROPY, 0)
    kgw_cfg = cfg_for(Scheme.KGW, delta=3.0)
    cue_cfg = cfg_for(Scheme.CUE, delta=3.0)
    emitted = generate_watermarked(
        model, ["x0"], kgw_cfg, rng=np.random.default_rng(2), max_tokens=150
    )
    toks = tokenize(render_token_texts(emitted, PYTHON_LIKE), PYTHON_LIKE)
    kgw_report = detect(toks, kgw_cfg)
    cue_report = detect(toks, cue_cfg, full)
    assert kgw_report.t == cue_report.t
    assert kgw_report.green_hits == cue_report.green_hits
    assert kgw_report.z == cue_report.z


def test_ewd_matches_manual_weighted_oracle():
    model, cues, prompt = corpus_model_and_cues()
    cfg = cfg_for(Scheme.EWD, delta=4.0)
    emitted = generate_watermarked(
        model, prompt, cfg, rng=np.random.default_rng(10), max_tokens=120
    )
    toks = tokenize(render_token_texts(emitted, PYTHON_LIKE), PYTHON_LIKE)
    report = detect(toks, cfg, None, model)

    # independent recomputation straight from definitions
    from cuemark.lm import entropy as dist_entropy

    texts = countable_texts(toks)
    num = 0.0
    wsum = 0.0
    wsq = 0.0
    for i in range(1, len(texts)):
        w = dist_entropy(next_distribution(model, texts[:i]))
        g = is_green(KEY, texts[max(0, i - 1):i], texts[i], cfg.gamma)
        wsum += w
        wsq += w * w
        if g:
            num += w
    expected = (num - cfg.gamma * wsum) / math.sqrt(cfg.gamma * (1 - cfg.gamma) * wsq)
    assert report.z == pytest.approx(expected, abs=1e-9)
    assert recompute_z(report) == report.z


def test_detect_scope_mask_restricts_scoring():
    model, cues, prompt = corpus_model_and_cues()
    cfg = cfg_for(Scheme.KGW, delta=0.0)
    emitted = plain_sampling(model, prompt, np.random.default_rng(6), 150)
    toks = tokenize(render_token_texts(emitted, PYTHON_LIKE), PYTHON_LIKE)
    full = detect(toks, cfg)
    from cuemark.attacks import code_only_mask

    masked = detect(toks, cfg, mask=code_only_mask(toks))
    assert masked.t < full.t
    assert masked.t > 0


def test_config_validation():
    with pytest.raises(ValueError):
        cfg_for(Scheme.KGW, gamma=1.0)
    with pytest.raises(ValueError):
        cfg_for(Scheme.KGW, gamma=0.0)
    with pytest.raises(ValueError):
        cfg_for(Scheme.KGW, delta=-1.0)
    with pytest.raises(ValueError):
        cfg_for(Scheme.KGW, context_width=0)
    with pytest.raises(ValueError):
        WatermarkConfig(scheme=Scheme.KGW, key=b"")
    assert Scheme.parse("CUE") is Scheme.CUE
    with pytest.raises(ValueError, match="unknown scheme"):
        Scheme.parse("bogus")


def test_report_round_trips_through_dict():
    report = synthetic_report()
    again = DetectionReport.from_dict(report.to_dict())
    assert again == report
