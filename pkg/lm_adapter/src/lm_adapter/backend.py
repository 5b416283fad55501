"""Corpus-backed toy model: unigram with single-token context fallback.

Good enough to demo the protocol end to end without any ML dependency.
Whitespace-delimited tokens; if the last context token was seen as a
predecessor in the corpus, serve its successor counts, otherwise fall back
to the global unigram.  Deterministic: sorted tokens, exact count ratios.
"""

from __future__ import annotations

from collections import Counter
from pathlib import Path


def toy_backend(corpus_path):
    corpus_path = Path(corpus_path)
    tokens = corpus_path.read_text(encoding="utf-8").split()
    if not tokens:
        raise ValueError(f"corpus is empty: {corpus_path}")

    unigram = Counter(tokens)
    bigram: dict[str, Counter] = {}
    for a, b in zip(tokens, tokens[1:]):
        bigram.setdefault(a, Counter())[b] += 1

    def normalize(counter: Counter) -> tuple[list[str], list[float]]:
        items = sorted(counter.items())
        total = sum(n for _, n in items)
        return [t for t, _ in items], [n / total for _, n in items]

    def callback(context):
        if context and context[-1] in bigram:
            return normalize(bigram[context[-1]])
        return normalize(unigram)

    return callback
