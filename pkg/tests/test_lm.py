import math

import numpy as np
import pytest

from cuemark.lm import (
    EOS_TOKEN,
    Distribution,
    NGramModel,
    entropy,
    next_distribution,
    sample,
    train_ngram,
)
from cuemark.tokenizer import PYTHON_LIKE, tokenize


def test_add_one_smoothing_hand_example():
    model = train_ngram([["a", "b"]], order=2, alpha=1.0)
    assert model.vocab == {"a", "b", EOS_TOKEN}
    d = next_distribution(model, ["a"])
    # count(a->b)=1, total(a)=1, |vocab|=3: (1+1)/(1+3)
    assert dict(zip(d.support, d.probs))["b"] == pytest.approx(0.5, abs=1e-12)
    d.validate()


def test_unseen_context_is_uniform():
    model = train_ngram([["a", "b", "c"]], order=3, alpha=0.1)
    d = next_distribution(model, ["zz", "qq"])
    assert np.allclose(d.probs, 1.0 / len(d.support), atol=1e-12)


def test_order_one_is_context_free():
    model = train_ngram([["a", "b", "a"]], order=1, alpha=0.5)
    d1 = next_distribution(model, [])
    d2 = next_distribution(model, ["b"])
    assert np.array_equal(d1.probs, d2.probs)
    # unigram counts: a twice, b once, EOS once; alpha 0.5 over 3 types
    expected_a = (2 + 0.5) / (4 + 0.5 * 3)
    assert dict(zip(d1.support, d1.probs))["a"] == pytest.approx(expected_a, abs=1e-12)


def test_short_context_uses_trained_short_windows():
    model = train_ngram([["a", "b", "c"]], order=3, alpha=0.01)
    d = next_distribution(model, ["a"])
    probs = dict(zip(d.support, d.probs))
    assert probs["b"] > 0.9


def test_distributions_normalized_and_deterministic():
    rng = np.random.default_rng(0)
    seqs = [[rng.choice(list("abcdef")) for _ in range(30)] for _ in range(5)]
    model = train_ngram([list(map(str, s)) for s in seqs], order=3, alpha=0.2)
    for _ in range(100):
        ctx = [str(rng.choice(list("abcdef"))) for _ in range(rng.integers(0, 4))]
        d = next_distribution(model, ctx)
        assert abs(float(d.probs.sum()) - 1.0) < 1e-9
        again = next_distribution(model, ctx)
        assert d.support == again.support
        assert np.array_equal(d.probs, again.probs)


def test_all_probabilities_strictly_positive():
    model = train_ngram([["a", "b"]], order=2, alpha=0.01)
    for ctx in ([], ["a"], ["b"], ["nope"]):
        assert np.all(next_distribution(model, ctx).probs > 0)


def test_smoothing_limit_is_uniform():
    model = train_ngram([["a", "b", "a", "c"]], order=2, alpha=1e6)
    d = next_distribution(model, ["a"])
    assert float(np.abs(d.probs - 1.0 / len(d.support)).max()) <= 1e-3


def test_train_rejects_bad_args():
    with pytest.raises(ValueError):
        train_ngram([["a"]], order=0)
    with pytest.raises(ValueError):
        train_ngram([["a"]], alpha=0.0)
    with pytest.raises(ValueError, match="empty corpus"):
        train_ngram([])


def test_train_accepts_token_objects_and_skips_layout():
    toks = tokenize("a b\nc", PYTHON_LIKE)
    model = train_ngram([toks], order=2, alpha=1.0)
    assert model.vocab == {"a", "b", "c", EOS_TOKEN}


def test_entropy_examples():
    uniform = Distribution(("a", "b", "c", "d"), np.full(4, 0.25))
    assert entropy(uniform) == pytest.approx(math.log(4), abs=1e-12)
    point = Distribution(("a", "b"), np.array([1.0, 0.0]))
    assert entropy(point) == 0.0
    skewed = Distribution(("a", "b"), np.array([0.75, 0.25]))
    assert entropy(skewed) == pytest.approx(0.5623, abs=1e-4)


def test_sample_point_mass_any_seed():
    d = Distribution(("a", "b"), np.array([0.0, 1.0]))
    for seed in range(5):
        assert sample(d, np.random.default_rng(seed)) == "b"


def test_sample_greedy_mode_and_tie_break():
    d = Distribution(("b", "a", "c"), np.array([0.4, 0.4, 0.2]))
    assert sample(d, np.random.default_rng(0), temperature=0.0) == "a"
    peaked = Distribution(("x", "y"), np.array([0.3, 0.7]))
    assert sample(peaked, np.random.default_rng(0), temperature=0.0) == "y"


def test_sample_monte_carlo_frequencies():
    d = Distribution(("a", "b"), np.array([0.7, 0.3]))
    rng = np.random.default_rng(42)
    draws = [sample(d, rng) for _ in range(100_000)]
    freq_a = draws.count("a") / len(draws)
    assert abs(freq_a - 0.7) < 0.01


def test_sample_reproducible_given_seed():
    model = train_ngram([["a", "b", "c", "a", "b"]], order=2, alpha=0.5)
    d = next_distribution(model, ["a"])
    out1 = [sample(d, np.random.default_rng(7)) for _ in range(10)]
    out2 = [sample(d, np.random.default_rng(7)) for _ in range(10)]
    assert out1 == out2


def test_temperature_sharpens():
    d = Distribution(("a", "b"), np.array([0.6, 0.4]))
    rng = np.random.default_rng(1)
    cold = [sample(d, rng, temperature=0.2) for _ in range(2000)]
    assert cold.count("a") / 2000 > 0.85


def test_distribution_validation_catches_defects():
    with pytest.raises(ValueError):
        Distribution(("a", "a"), np.array([0.5, 0.5])).validate()
    with pytest.raises(ValueError):
        Distribution(("a", "b"), np.array([0.7, 0.2])).validate()
    with pytest.raises(ValueError):
        Distribution(("a",), np.array([-1.0])).validate()
