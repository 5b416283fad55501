"""Cue list: the confidential set of tokens that gate watermark placement.

A token is a cue when its successors in a reference corpus are hard to
predict (high successor entropy under a 1-gram model), so the token right
after it can absorb a sampling bias without hurting the text.  The list is
built once from corpus co-occurrence counts, persisted to a small
line-oriented file, and must stay secret: an attacker who knows it can
target exactly the watermarked positions.
"""

from __future__ import annotations

import enum
import math
import urllib.parse
from dataclasses import dataclass, field
from pathlib import Path

from .tokenizer import (
    LAYOUT_KINDS,
    LanguageProfile,
    PYTHON_LIKE,
    TokenKind,
    classify_text,
    tokenize,
)

FNV64_OFFSET = 14695981039346656037
FNV64_PRIME = 1099511628211
_MASK64 = (1 << 64) - 1

# Kinds that may never act as cues: comments are removable and layout is
# trivially rewritable, so gating on them would hand robustness back to the
# attacker.
NON_CUE_KINDS = frozenset({TokenKind.COMMENT}) | LAYOUT_KINDS


def fnv1a_64(data: bytes, h: int = FNV64_OFFSET) -> int:
    """Plain FNV-1a over 64 bits; bit-exact across platforms."""
    for byte in data:
        h = ((h ^ byte) * FNV64_PRIME) & _MASK64
    return h


def fingerprint_bytes(chunks) -> int:
    h = FNV64_OFFSET
    for chunk in chunks:
        h = fnv1a_64(chunk, h)
        h = fnv1a_64(b"\x00", h)
    return h


def fingerprint_corpus(paths) -> int:
    """64-bit digest over file names and contents, order-independent input."""
    paths = sorted(Path(p) for p in paths)
    chunks = []
    for p in paths:
        chunks.append(p.name.encode("utf-8"))
        chunks.append(p.read_bytes())
    return fingerprint_bytes(chunks)


class CueDirection(enum.Enum):
    HIGH_ENTROPY = "high"
    LOW_ENTROPY = "low"


@dataclass
class PairCounts:
    """Adjacent-pair statistics over a tokenized corpus.

    Layout tokens never pair; pairs never cross sequence boundaries.  Counts
    form a commutative monoid, so shards can be merged.
    """

    counts: dict[tuple[str, str], int] = field(default_factory=dict)
    totals: dict[str, int] = field(default_factory=dict)
    corpus_size: int = 0
    fingerprint: int = 0
    kinds: dict[str, TokenKind] = field(default_factory=dict)

    _successors: dict[str, dict[str, int]] | None = field(
        default=None, repr=False, compare=False
    )

    def successors(self, t: str) -> dict[str, int]:
        if self._successors is None:
            succ: dict[str, dict[str, int]] = {}
            for (a, b), n in self.counts.items():
                succ.setdefault(a, {})[b] = n
            object.__setattr__(self, "_successors", succ)
        return self._successors.get(t, {})

    def merge(self, other: "PairCounts") -> "PairCounts":
        merged = PairCounts(
            counts=dict(self.counts),
            totals=dict(self.totals),
            corpus_size=self.corpus_size + other.corpus_size,
            fingerprint=self.fingerprint ^ other.fingerprint,
            kinds=dict(self.kinds),
        )
        for pair, n in other.counts.items():
            merged.counts[pair] = merged.counts.get(pair, 0) + n
        for t, n in other.totals.items():
            merged.totals[t] = merged.totals.get(t, 0) + n
        for t, k in other.kinds.items():
            merged.kinds.setdefault(t, k)
        return merged


def count_cooccurrence(
    corpus, profile: LanguageProfile = PYTHON_LIKE, fingerprint: int = 0
) -> PairCounts:
    """Count adjacent (predecessor, successor) pairs over token sequences.

    Accepts sequences of Token objects (layout tokens are skipped) or of
    plain strings (classified against the profile).
    """
    pc = PairCounts(fingerprint=fingerprint)
    for seq in corpus:
        stream: list[str] = []
        for t in seq:
            if isinstance(t, str):
                text, kind = t, pc.kinds.get(t) or classify_text(t, profile) or TokenKind.OTHER
            else:
                text, kind = t.text, t.kind
            if kind in LAYOUT_KINDS:
                continue
            stream.append(text)
            pc.kinds.setdefault(text, kind)
        pc.corpus_size += len(stream)
        for a, b in zip(stream, stream[1:]):
            pc.counts[(a, b)] = pc.counts.get((a, b), 0) + 1
            pc.totals[a] = pc.totals.get(a, 0) + 1
    if pc.corpus_size == 0:
        raise ValueError("empty corpus")
    return pc


def successor_entropy(pc: PairCounts, t: str) -> float:
    """Shannon entropy (nats) of the successor distribution of t."""
    total = pc.totals.get(t, 0)
    if total <= 0:
        raise ValueError(f"token has no successors: {t!r}")
    h = 0.0
    for n in pc.successors(t).values():
        p = n / total
        h -= p * math.log(p)
    return h


def entropy_values(pc: PairCounts) -> dict[str, float]:
    return {t: successor_entropy(pc, t) for t in pc.totals}


def entropy_percentile(pc: PairCounts, pct: float) -> float:
    """Percentile (linear interpolation) of the successor-entropy values."""
    values = sorted(entropy_values(pc).values())
    if not values:
        raise ValueError("empty corpus")
    if len(values) == 1:
        return values[0]
    rank = (pct / 100.0) * (len(values) - 1)
    lo = int(math.floor(rank))
    hi = min(lo + 1, len(values) - 1)
    frac = rank - lo
    return values[lo] * (1 - frac) + values[hi] * frac


@dataclass
class CueList:
    members: frozenset[str]
    beta: float
    direction: CueDirection
    corpus_fingerprint: int
    version: int = 1
    warning: str | None = field(default=None, compare=False)


def build_cue_list(
    pc: PairCounts,
    beta: float,
    direction: CueDirection = CueDirection.HIGH_ENTROPY,
) -> CueList:
    """Threshold successor entropies into a cue list.

    HIGH_ENTROPY keeps tokens with entropy >= beta (the useful direction);
    LOW_ENTROPY keeps the strict complement and exists so the inverted
    selection rule stays runnable for comparison.
    """
    if not math.isfinite(beta):
        raise ValueError("beta must be finite")
    if not pc.totals:
        raise ValueError("empty pair counts")
    members = set()
    for t in pc.totals:
        h = successor_entropy(pc, t)
        keep = h >= beta if direction is CueDirection.HIGH_ENTROPY else h < beta
        if keep and pc.kinds.get(t) not in NON_CUE_KINDS:
            members.add(t)
    warning = None if members else "cue list is empty at this threshold"
    return CueList(
        members=frozenset(members),
        beta=float(beta),
        direction=direction,
        corpus_fingerprint=pc.fingerprint,
        warning=warning,
    )


def is_cue(cl: CueList, text: str, kind: TokenKind | None = None,
           profile: LanguageProfile = PYTHON_LIKE) -> bool:
    """Membership test with the kind filter applied at query time.

    Callers that already hold a Token pass its kind; otherwise the text is
    classified standalone.  Comment and layout texts are never cues even if
    present in the member set.
    """
    if text not in cl.members:
        return False
    if kind is None:
        kind = classify_text(text, profile)
    return kind not in NON_CUE_KINDS


_HEADER = "CUELIST v1"


def save(cl: CueList, path) -> None:
    lines = [_HEADER]
    lines.append(
        "beta={} direction={} fingerprint={:016x} count={}".format(
            repr(cl.beta), cl.direction.value, cl.corpus_fingerprint, len(cl.members)
        )
    )
    lines.extend(sorted(urllib.parse.quote(m, safe="") for m in cl.members))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load(path) -> CueList:
    raw = Path(path).read_text(encoding="utf-8")
    lines = raw.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ValueError("malformed cue list file")
    if lines[0] != _HEADER:
        if lines[0].startswith("CUELIST v"):
            raise ValueError(f"unsupported version: {lines[0]!r}")
        raise ValueError("malformed cue list file")
    if len(lines) < 2:
        raise ValueError("malformed cue list file")
    fields = lines[1].split(" ")
    meta = {}
    for f in fields:
        key, sep, value = f.partition("=")
        if not sep:
            raise ValueError("malformed cue list file")
        meta[key] = value
    try:
        beta = float(meta["beta"])
        direction = CueDirection(meta["direction"])
        fingerprint = int(meta["fingerprint"], 16)
        count = int(meta["count"])
    except (KeyError, ValueError) as exc:
        raise ValueError("malformed cue list file") from exc
    body = lines[2:]
    if len(body) != count:
        raise ValueError("malformed cue list file")
    members = frozenset(urllib.parse.unquote(line) for line in body)
    if len(members) != count:
        raise ValueError("malformed cue list file")
    warning = None if members else "cue list is empty at this threshold"
    return CueList(members, beta, direction, fingerprint, warning=warning)
