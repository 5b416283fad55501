from pathlib import Path

import pytest

from lm_adapter import toy_backend

CORPUS = Path(__file__).parent / "data" / "tiny_corpus.txt"


def test_empty_context_serves_unigram():
    tokens, probs = toy_backend(CORPUS)([])
    assert tokens == ["alpha", "beta", "gamma"]
    assert probs == pytest.approx([1 / 3, 1 / 3, 1 / 3])


def test_context_fallback_uses_last_token():
    cb = toy_backend(CORPUS)
    assert cb(["whatever", "alpha"]) == cb(["alpha"])
    assert cb(["never-seen"]) == cb([])


def test_deterministic_across_builds():
    a = toy_backend(CORPUS)
    b = toy_backend(CORPUS)
    for ctx in ([], ["alpha"], ["gamma"], ["zzz"]):
        assert a(ctx) == b(ctx)


def test_probabilities_sum_to_one():
    cb = toy_backend(CORPUS)
    for ctx in ([], ["alpha"], ["beta"], ["gamma"]):
        _, probs = cb(ctx)
        assert sum(probs) == pytest.approx(1.0, abs=1e-12)
        assert all(p > 0 for p in probs)


def test_empty_corpus_rejected(tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text(" \n")
    with pytest.raises(ValueError, match="empty"):
        toy_backend(empty)
