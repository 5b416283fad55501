"""Green/red-list watermark schemes: injection and detection.

Four schemes share one keyed token partition and one z-statistic and differ
only in *where* they act:

  kgw    bias and score every position
  sweet  bias and score only positions where the model itself is uncertain
         (distribution entropy at or above a threshold)
  ewd    bias everywhere, weight each scored position by model entropy
  cue    bias and score only positions whose predecessor is on the cue list

The cue scheme needs no model at detection time: the gate re-evaluates on
the text alone, which is what keeps it cheap and robust to edits elsewhere.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .cue_list import FNV64_PRIME, _MASK64, CueList, fnv1a_64, is_cue
from .lm import EOS_TOKEN, Distribution, entropy, next_distribution, sample
from .tokenizer import LAYOUT_KINDS, PYTHON_LIKE, LanguageProfile, classify_text


class Scheme(enum.Enum):
    KGW = "kgw"
    SWEET = "sweet"
    EWD = "ewd"
    CUE = "cue"

    @classmethod
    def parse(cls, name: str) -> "Scheme":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(
                f"unknown scheme {name!r}; expected one of "
                f"{', '.join(s.value for s in cls)}"
            ) from None


# Schemes that need a model at detection time (per-position entropy).
MODEL_BOUND_SCHEMES = frozenset({Scheme.SWEET, Scheme.EWD})


@dataclass(frozen=True)
class WatermarkConfig:
    scheme: Scheme
    key: bytes
    gamma: float = 0.5
    delta: float = 4.0
    context_width: int = 2  # hash window N; the previous N-1 tokens are hashed
    sweet_entropy_threshold: float = 1.0
    z_threshold: float = 2.0

    def __post_init__(self) -> None:
        if not isinstance(self.scheme, Scheme):
            raise TypeError("scheme must be a Scheme")
        if not self.key:
            raise ValueError("key must be non-empty")
        if not (0.0 < self.gamma < 1.0):
            raise ValueError("gamma must lie strictly inside (0, 1)")
        if self.delta < 0:
            raise ValueError("delta must be >= 0")
        if self.context_width < 1:
            raise ValueError("context_width must be >= 1")
        if self.sweet_entropy_threshold < 0:
            raise ValueError("sweet_entropy_threshold must be >= 0")


def _hash_seed(key: bytes, context) -> int:
    h = fnv1a_64(key)
    h = ((h ^ 0x00) * FNV64_PRIME) & _MASK64
    for tok in context:
        h = fnv1a_64(tok.encode("utf-8"), h)
        h = ((h ^ 0x00) * FNV64_PRIME) & _MASK64
    return h


def is_green(key: bytes, context, candidate: str, gamma: float) -> bool:
    """Keyed pseudo-random membership of `candidate` in the green list.

    FNV-1a-64 over (key, then each context token, all 0x00-terminated) seeds
    a second FNV-1a-64 over the candidate; the low 32 bits, scaled to [0, 1),
    decide membership against gamma.  Deterministic and bit-exact.
    """
    seed = _hash_seed(key, context)
    h = fnv1a_64(candidate.encode("utf-8"), fnv1a_64(seed.to_bytes(8, "big")))
    return (h & 0xFFFFFFFF) / 4294967296.0 < gamma


class GreenLists:
    """Per-context green masks over a fixed support, cached across calls.

    Generation asks for the whole vocabulary's colors at every step; contexts
    repeat constantly, so one mask per distinct hash context amortizes the
    hashing to near-zero.
    """

    def __init__(self, key: bytes, gamma: float, support: tuple[str, ...]):
        self.key = key
        self.gamma = gamma
        self.support = support
        self.eos_index = support.index(EOS_TOKEN) if EOS_TOKEN in support else None
        self._masks: dict[tuple[str, ...], np.ndarray] = {}

    def mask(self, context) -> np.ndarray:
        ctx = tuple(context)
        cached = self._masks.get(ctx)
        if cached is not None:
            return cached
        seed = _hash_seed(self.key, ctx)
        prefix = fnv1a_64(seed.to_bytes(8, "big"))
        # same arithmetic as is_green, so masks and spot checks always agree
        mask = np.fromiter(
            (
                (fnv1a_64(w.encode("utf-8"), prefix) & 0xFFFFFFFF) / 4294967296.0
                < self.gamma
                for w in self.support
            ),
            dtype=bool,
            count=len(self.support),
        )
        self._masks[ctx] = mask
        return mask


def bias_distribution(d: Distribution, green, delta: float) -> Distribution:
    """Multiply green-token probabilities by e**delta and renormalize.

    `green` is a predicate over token texts or a boolean mask aligned with
    the support.  delta == 0 returns the distribution unchanged.
    """
    if delta == 0:
        return d
    if isinstance(green, np.ndarray):
        mask = green
    else:
        mask = np.fromiter(
            (bool(green(w)) for w in d.support), dtype=bool, count=len(d.support)
        )
    return Distribution(d.support, _biased_probs(d.probs, mask, delta))


def _biased_probs(probs: np.ndarray, mask: np.ndarray, delta: float) -> np.ndarray:
    # log-space with a log-sum-exp style renormalization for stability
    with np.errstate(divide="ignore"):
        logp = np.where(probs > 0, np.log(probs), -np.inf)
    logp = logp + np.where(mask, delta, 0.0)
    logp -= logp.max()
    out = np.exp(logp)
    out /= out.sum()
    return out


def _hash_context(texts, width: int):
    if width <= 1:
        return ()
    return tuple(texts[-(width - 1):]) if texts else ()


def generate_watermarked(
    model,
    prompt,
    cfg: WatermarkConfig,
    cue_list: CueList | None = None,
    *,
    rng: np.random.Generator,
    max_tokens: int,
    temperature: float = 1.0,
    profile: LanguageProfile = PYTHON_LIKE,
    green_cache: GreenLists | None = None,
    trace: list | None = None,
) -> list[str]:
    """Sample a continuation with the scheme's gate applied at each step.

    Returns only the generated token texts (the prompt is not echoed).
    Stops at EOS or after max_tokens.  Pass `trace` (a list) to record the
    gate, hash context, and sampled-token color per emitted position.
    """
    if max_tokens <= 0:
        raise ValueError("max_tokens must be positive")
    if cfg.scheme is Scheme.CUE and cue_list is None:
        raise ValueError("cue scheme requires a cue list")

    context = [t if isinstance(t, str) else t.text for t in prompt]
    emitted: list[str] = []
    greens = green_cache
    for _ in range(max_tokens):
        d = next_distribution(model, context)
        if cfg.scheme is Scheme.CUE:
            prev = context[-1] if context else None
            gate = prev is not None and is_cue(cue_list, prev, profile=profile)
        elif cfg.scheme is Scheme.SWEET:
            gate = entropy(d) >= cfg.sweet_entropy_threshold
        else:  # kgw and ewd bias every position
            gate = True

        hash_ctx = _hash_context(context, cfg.context_width)
        if gate and cfg.delta > 0:
            if greens is None or (
                greens.support is not d.support and greens.support != d.support
            ):
                greens = GreenLists(cfg.key, cfg.gamma, d.support)
            mask = greens.mask(hash_ctx)
            if greens.eos_index is not None and mask[greens.eos_index]:
                mask = mask.copy()
                mask[greens.eos_index] = False  # EOS is never green-biased
            d = Distribution(d.support, _biased_probs(d.probs, mask, cfg.delta))
        token = sample(d, rng, temperature)
        if token == EOS_TOKEN:
            break
        if trace is not None:
            trace.append(
                {
                    "index": len(emitted),
                    "gate": bool(gate),
                    "token": token,
                    "context": hash_ctx,
                    "green": is_green(cfg.key, hash_ctx, token, cfg.gamma),
                }
            )
        emitted.append(token)
        context.append(token)
    return emitted


@dataclass
class TraceEntry:
    position: int  # index into the original token sequence handed to detect()
    stream_index: int  # index into the layout-free scored stream
    in_scope: bool
    green: bool | None
    weight: float


@dataclass
class DetectionReport:
    scheme: Scheme
    gamma: float
    z_threshold: float
    t: int
    green_hits: int
    weighted_t: float
    weighted_hits: float
    weighted_sq: float
    z: float
    verdict: bool
    insufficient_scope: bool = False
    trace: list[TraceEntry] | None = field(default=None, repr=False)

    def to_dict(self, include_trace: bool = False) -> dict:
        out = {
            "scheme": self.scheme.value,
            "gamma": self.gamma,
            "z_threshold": self.z_threshold,
            "t": self.t,
            "green_hits": self.green_hits,
            "weighted_t": self.weighted_t,
            "weighted_hits": self.weighted_hits,
            "weighted_sq": self.weighted_sq,
            "z": self.z,
            "verdict": self.verdict,
            "insufficient_scope": self.insufficient_scope,
        }
        if include_trace and self.trace is not None:
            out["trace"] = [
                {
                    "position": e.position,
                    "stream_index": e.stream_index,
                    "in_scope": e.in_scope,
                    "green": e.green,
                    "weight": e.weight,
                }
                for e in self.trace
            ]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "DetectionReport":
        return cls(
            scheme=Scheme.parse(data["scheme"]),
            gamma=data["gamma"],
            z_threshold=data["z_threshold"],
            t=data["t"],
            green_hits=data["green_hits"],
            weighted_t=data["weighted_t"],
            weighted_hits=data["weighted_hits"],
            weighted_sq=data["weighted_sq"],
            z=data["z"],
            verdict=data["verdict"],
            insufficient_scope=data.get("insufficient_scope", False),
        )


def z_from_counts(weighted_hits: float, weighted_t: float, weighted_sq: float,
                  gamma: float) -> float:
    """Weighted one-proportion z; reduces to the plain form at unit weights."""
    denom = math.sqrt(gamma * (1.0 - gamma) * weighted_sq)
    return (weighted_hits - gamma * weighted_t) / denom


def detect(
    tokens,
    cfg: WatermarkConfig,
    cue_list: CueList | None = None,
    model=None,
    *,
    mask=None,
    with_trace: bool = False,
) -> DetectionReport:
    """Score a token sequence for the configured scheme.

    `tokens` must come from the shared lexer.  `mask`, when given, is a
    per-position boolean (aligned with `tokens`) restricting which positions
    may be scored; gate predecessors and hash contexts always come from the
    full layout-free stream, since masked-out text is still on the page.
    """
    if cfg.scheme in MODEL_BOUND_SCHEMES and model is None:
        raise ValueError(f"{cfg.scheme.value} detection requires a model")
    if cfg.scheme is Scheme.CUE and cue_list is None:
        raise ValueError("cue scheme requires a cue list")

    stream = [
        (i, t) for i, t in enumerate(tokens) if t.kind not in LAYOUT_KINDS
    ]
    texts = [t.text for _, t in stream]

    entries: list[TraceEntry] = []
    weighted_t = 0.0
    weighted_hits = 0.0
    weighted_sq = 0.0
    t_count = 0
    green_count = 0
    for idx, (orig_pos, tok) in enumerate(stream):
        weight = 1.0
        if idx == 0:
            in_scope = False
        else:
            in_scope = mask is None or bool(mask[orig_pos])
            if in_scope:
                if cfg.scheme is Scheme.CUE:
                    prev_pos, prev = stream[idx - 1]
                    in_scope = is_cue(cue_list, prev.text, kind=prev.kind)
                elif cfg.scheme is Scheme.SWEET:
                    h = entropy(next_distribution(model, texts[:idx]))
                    in_scope = h >= cfg.sweet_entropy_threshold
                elif cfg.scheme is Scheme.EWD:
                    weight = entropy(next_distribution(model, texts[:idx]))
        green = None
        if idx > 0:
            ctx = _hash_context(texts[:idx], cfg.context_width)
            green = is_green(cfg.key, ctx, tok.text, cfg.gamma)
        if in_scope:
            t_count += 1
            green_count += int(green)
            weighted_t += weight
            weighted_sq += weight * weight
            if green:
                weighted_hits += weight
        if with_trace:
            entries.append(
                TraceEntry(orig_pos, idx, bool(in_scope), green,
                           weight if in_scope else 0.0)
            )

    if t_count == 0 or weighted_sq == 0.0:
        return DetectionReport(
            scheme=cfg.scheme,
            gamma=cfg.gamma,
            z_threshold=cfg.z_threshold,
            t=t_count,
            green_hits=green_count,
            weighted_t=weighted_t,
            weighted_hits=weighted_hits,
            weighted_sq=weighted_sq,
            z=0.0,
            verdict=False,
            insufficient_scope=True,
            trace=entries if with_trace else None,
        )

    z = z_from_counts(weighted_hits, weighted_t, weighted_sq, cfg.gamma)
    return DetectionReport(
        scheme=cfg.scheme,
        gamma=cfg.gamma,
        z_threshold=cfg.z_threshold,
        t=t_count,
        green_hits=green_count,
        weighted_t=weighted_t,
        weighted_hits=weighted_hits,
        weighted_sq=weighted_sq,
        z=z,
        verdict=z > cfg.z_threshold,
        trace=entries if with_trace else None,
    )


def recompute_z(report: DetectionReport) -> float:
    """Re-derive z from the stored counts; detects tampered reports."""
    if report.t == 0:
        raise ValueError("report has no in-scope tokens")
    return z_from_counts(
        report.weighted_hits, report.weighted_t, report.weighted_sq, report.gamma
    )
