"""Smoothed n-gram token model: the desk-scale stand-in for a code LLM.

The watermark math only needs a next-token distribution, so any model that
serves one plugs in here.  The built-in model is an order-n counter with
add-alpha smoothing over the full vocabulary: deterministic to train,
deterministic to query, and fast enough to run thousands of documents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .tokenizer import LAYOUT_KINDS

# Reserved end-of-sequence marker.  The lexer can never produce this string
# as a single token, so it cannot collide with corpus vocabulary.
EOS_TOKEN = "<|eos|>"

DEFAULT_ORDER = 3
# Smoothing is kept near-lossless by default: the bundled corpus is designed
# so that generation walks observed contexts, and a fat smoothing tail would
# bleed probability into unseen continuations at every step.  At high bias
# strengths even a 1e-6 tail lets the sampler jump off-corpus (the bias
# multiplies the whole tail), so the default sits at 1e-8.
DEFAULT_ALPHA = 1e-8


@dataclass
class Distribution:
    """Next-token distribution over an explicit, duplicate-free support."""

    support: tuple[str, ...]
    probs: np.ndarray

    def validate(self, atol: float = 1e-9) -> None:
        if len(self.support) != len(self.probs):
            raise ValueError("support and probs length mismatch")
        if len(set(self.support)) != len(self.support):
            raise ValueError("support has duplicates")
        if len(self.probs) == 0:
            raise ValueError("empty distribution")
        if np.any(self.probs < 0):
            raise ValueError("negative probability")
        if abs(float(self.probs.sum()) - 1.0) > atol:
            raise ValueError("probabilities do not sum to 1")


def entropy(d: Distribution) -> float:
    """Shannon entropy in nats; 0 log 0 taken as 0."""
    p = d.probs[d.probs > 0]
    return float(-(p * np.log(p)).sum())


class NGramModel:
    """Add-alpha n-gram counts over non-layout token texts plus EOS.

    Immutable after training; queries are cached per context, so concurrent
    readers and long generation loops stay cheap.
    """

    def __init__(self, order: int, alpha: float):
        if order < 1:
            raise ValueError("order must be >= 1")
        if not (alpha > 0):
            raise ValueError("alpha must be > 0")
        self.order = order
        self.alpha = alpha
        self.context_counts: dict[tuple[str, ...], dict[str, int]] = {}
        self.vocab: frozenset[str] = frozenset()
        self.support: tuple[str, ...] = ()
        self._index: dict[str, int] = {}
        self._dist_cache: dict[tuple[str, ...], np.ndarray] = {}
        self._uniform: np.ndarray | None = None

    def _finalize(self) -> None:
        self.support = tuple(sorted(self.vocab))
        self._index = {w: i for i, w in enumerate(self.support)}
        self._uniform = np.full(len(self.support), 1.0 / len(self.support))

    def context_key(self, context) -> tuple[str, ...]:
        context = tuple(context)
        if self.order == 1:
            return ()
        return context[-(self.order - 1):]

    def probs_for(self, context) -> np.ndarray:
        key = self.context_key(context)
        cached = self._dist_cache.get(key)
        if cached is not None:
            return cached
        counts = self.context_counts.get(key)
        if counts is None:
            # pure smoothing mass: uniform over the vocabulary
            return self._uniform
        arr = np.full(len(self.support), self.alpha)
        for w, n in counts.items():
            arr[self._index[w]] += n
        arr /= arr.sum()
        self._dist_cache[key] = arr
        return arr

    def next_distribution(self, context) -> Distribution:
        return Distribution(self.support, self.probs_for(context))


def train_ngram(corpus, order: int = DEFAULT_ORDER, alpha: float = DEFAULT_ALPHA) -> NGramModel:
    """Count every window up to length `order` over the corpus sequences.

    Each sequence contributes its non-layout token texts followed by EOS.
    Shorter-context windows are counted too, so early-sequence queries see
    trained statistics instead of raw smoothing.
    """
    model = NGramModel(order, alpha)
    vocab = {EOS_TOKEN}
    n_tokens = 0
    for seq in corpus:
        texts = [
            t if isinstance(t, str) else t.text
            for t in seq
            if isinstance(t, str) or t.kind not in LAYOUT_KINDS
        ]
        if not texts:
            continue
        n_tokens += len(texts)
        vocab.update(texts)
        texts = texts + [EOS_TOKEN]
        for i, w in enumerate(texts):
            for ctx_len in range(min(i, order - 1) + 1):
                key = tuple(texts[i - ctx_len:i])
                model.context_counts.setdefault(key, {})
                model.context_counts[key][w] = model.context_counts[key].get(w, 0) + 1
    if n_tokens == 0:
        raise ValueError("empty corpus")
    model.vocab = frozenset(vocab)
    model._finalize()
    return model


def next_distribution(model, context) -> Distribution:
    """Dispatch helper so n-gram models and adapter clients interchange."""
    return model.next_distribution(context)


def sample(d: Distribution, rng: np.random.Generator, temperature: float = 1.0) -> str:
    """Draw from d at the given temperature; temperature 0 is greedy.

    Greedy ties break toward the lexicographically smallest token (supports
    are sorted for the built-in model, and argmax takes the first maximum).
    """
    if temperature < 0:
        raise ValueError("temperature must be >= 0")
    if temperature == 0:
        order = np.lexsort((np.array(d.support), -d.probs))
        return d.support[int(order[0])]
    if temperature == 1.0:
        p = d.probs
    else:
        with np.errstate(divide="ignore"):
            logits = np.where(d.probs > 0, np.log(d.probs), -np.inf) / temperature
        logits -= logits.max()
        p = np.exp(logits)
    p = p / p.sum()
    idx = rng.choice(len(d.support), p=p)
    return d.support[int(idx)]


def log_sum_exp(values: np.ndarray) -> float:
    m = float(values.max())
    if math.isinf(m):
        return m
    return m + math.log(float(np.exp(values - m).sum()))
