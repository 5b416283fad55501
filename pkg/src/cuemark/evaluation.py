"""Experiment harness: paired marked/raw generation, TPR/FPR/AUROC metrics.

Every document pairs a watermarked and an unwatermarked generation under
the same derived seed, so the watermark is the only difference between the
two score populations.  Reports are plain data and fully recomputable from
the stored scores.
"""

from __future__ import annotations

import csv
import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

import numpy as np

from .attacks import code_only_mask
from .cue_list import CueList
from .tokenizer import LanguageProfile, PYTHON_LIKE, TokenJoiner, tokenize
from .watermark import (
    GreenLists,
    Scheme,
    WatermarkConfig,
    detect,
    generate_watermarked,
)

REPORT_VERSION = 1

HISTOGRAM_EDGES = [round(-10.0 + 0.5 * i, 2) for i in range(61)]  # [-10, 20]

# Derived-seed retries used when a condition needs a minimum document length
# (the model can sample EOS early).  Deterministic: attempt k of document i
# always uses SeedSequence(seed, spawn_key=(i, k)).
MAX_LENGTH_RETRIES = 20


@dataclass
class TrialSet:
    condition: str
    marked_scores: list[float]
    raw_scores: list[float]
    marked_scope: list[int] = field(default_factory=list)
    raw_scope: list[int] = field(default_factory=list)
    config_snapshot: dict = field(default_factory=dict)


def config_snapshot(cfg: WatermarkConfig) -> dict:
    """Config fields worth recording; the key never leaves the process."""
    return {
        "scheme": cfg.scheme.value,
        "gamma": cfg.gamma,
        "delta": cfg.delta,
        "context_width": cfg.context_width,
        "sweet_entropy_threshold": cfg.sweet_entropy_threshold,
        "z_threshold": cfg.z_threshold,
    }


def _doc_rng(seed: int, doc_index: int, attempt: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(doc_index, attempt))
    return np.random.Generator(np.random.PCG64(ss))


def run_condition(
    prompts,
    model,
    cfg: WatermarkConfig,
    cue_list: CueList | None = None,
    attack=None,
    n_docs: int = 200,
    seed: int = 42,
    *,
    condition: str = "clean",
    scope: str = "full",
    max_tokens: int = 300,
    min_scoreable: int = 0,
    temperature: float = 1.0,
    profile: LanguageProfile = PYTHON_LIKE,
) -> TrialSet:
    """Generate, optionally attack, and detect n_docs marked/raw pairs."""
    if n_docs < 1:
        raise ValueError("n_docs must be >= 1")
    if scope not in ("full", "code-only"):
        raise ValueError(f"unknown scope {scope!r}")

    joiner = TokenJoiner(profile)
    greens = GreenLists(cfg.key, cfg.gamma, model.support) if hasattr(model, "support") else None
    raw_cfg = WatermarkConfig(
        scheme=cfg.scheme,
        key=cfg.key,
        gamma=cfg.gamma,
        delta=0.0,
        context_width=cfg.context_width,
        sweet_entropy_threshold=cfg.sweet_entropy_threshold,
        z_threshold=cfg.z_threshold,
    )
    ts = TrialSet(condition, [], [], config_snapshot=config_snapshot(cfg))
    for i in range(n_docs):
        prompt = prompts[i % len(prompts)]
        for variant_cfg, scores, scopes in (
            (cfg, ts.marked_scores, ts.marked_scope),
            (raw_cfg, ts.raw_scores, ts.raw_scope),
        ):
            report = None
            for attempt in range(MAX_LENGTH_RETRIES):
                try:
                    emitted = generate_watermarked(
                        model,
                        prompt,
                        variant_cfg,
                        cue_list,
                        rng=_doc_rng(seed, i, attempt),
                        max_tokens=max_tokens,
                        temperature=temperature,
                        profile=profile,
                        green_cache=greens,
                    )
                except Exception as exc:
                    raise RuntimeError(f"generation failed for document {i}") from exc
                tokens = tokenize(joiner.join(emitted), profile)
                if attack is not None:
                    tokens = attack(tokens, profile).tokens
                mask = code_only_mask(tokens) if scope == "code-only" else None
                report = detect(tokens, variant_cfg, cue_list, model, mask=mask)
                if min_scoreable == 0 or len(emitted) >= min_scoreable:
                    break
            scores.append(report.z)
            scopes.append(report.t)
    return ts


def tpr(ts: TrialSet, z_threshold: float) -> float:
    """Fraction of marked documents scoring strictly above the threshold."""
    if not ts.marked_scores:
        raise ValueError("no marked scores")
    return sum(z > z_threshold for z in ts.marked_scores) / len(ts.marked_scores)


def fpr(ts: TrialSet, z_threshold: float) -> float:
    """Fraction of raw documents scoring strictly above the threshold."""
    if not ts.raw_scores:
        raise ValueError("no raw scores")
    return sum(z > z_threshold for z in ts.raw_scores) / len(ts.raw_scores)


def _auroc_rank(marked, raw) -> float:
    """P(marked > raw) with ties counting half, via sorted raw + bisection."""
    sorted_raw = sorted(raw)
    total = 0.0
    for z in marked:
        below = bisect_left(sorted_raw, z)
        equal = bisect_right(sorted_raw, z) - below
        total += below + 0.5 * equal
    return total / (len(marked) * len(raw))


def _auroc_sweep(marked, raw) -> float:
    """Trapezoidal area under the ROC step curve over all score thresholds."""
    m, n = len(marked), len(raw)
    points = [(0.0, 0.0)]
    for thr in sorted(set(marked) | set(raw), reverse=True):
        tpr_t = sum(z >= thr for z in marked) / m
        fpr_t = sum(z >= thr for z in raw) / n
        points.append((fpr_t, tpr_t))
    points.append((1.0, 1.0))
    area = 0.0
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        area += (x1 - x0) * (y0 + y1) / 2.0
    return area


def auroc(ts_or_marked, raw=None) -> float:
    """Threshold-free separability of marked vs raw scores.

    Computed two ways (rank statistic and ROC-curve integral) that must
    agree to 1e-9; the rank value is returned.
    """
    if raw is None:
        marked, raw = ts_or_marked.marked_scores, ts_or_marked.raw_scores
    else:
        marked = ts_or_marked
    if not marked or not raw:
        raise ValueError("both score lists must be non-empty")
    rank = _auroc_rank(marked, raw)
    sweep = _auroc_sweep(marked, raw)
    if abs(rank - sweep) > 1e-9:
        raise AssertionError(f"AUROC computations disagree: {rank} vs {sweep}")
    return rank


def _histogram(scores) -> list[int]:
    clipped = np.clip(scores, HISTOGRAM_EDGES[0], HISTOGRAM_EDGES[-1])
    counts, _ = np.histogram(clipped, bins=HISTOGRAM_EDGES)
    return [int(c) for c in counts]


@dataclass
class EvalReport:
    rows: list[dict]
    metadata: dict
    report_version: int = REPORT_VERSION

    def to_dict(self) -> dict:
        return {
            "report_version": self.report_version,
            "metadata": self.metadata,
            "rows": self.rows,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EvalReport":
        return cls(
            rows=data["rows"],
            metadata=data["metadata"],
            report_version=data["report_version"],
        )


def trial_row(ts: TrialSet, cfg: WatermarkConfig, z_threshold: float) -> dict:
    return {
        "condition": ts.condition,
        "scheme": cfg.scheme.value,
        "delta": cfg.delta,
        "gamma": cfg.gamma,
        "n_docs": len(ts.marked_scores),
        "tpr": tpr(ts, z_threshold),
        "fpr": fpr(ts, z_threshold),
        "auroc": auroc(ts),
        "mean_z_marked": float(np.mean(ts.marked_scores)),
        "mean_z_raw": float(np.mean(ts.raw_scores)),
        "marked_scores": [float(z) for z in ts.marked_scores],
        "raw_scores": [float(z) for z in ts.raw_scores],
        "histogram": {
            "edges": HISTOGRAM_EDGES,
            "marked": _histogram(ts.marked_scores),
            "raw": _histogram(ts.raw_scores),
        },
    }


def ablation_sweep(
    deltas,
    prompts,
    model,
    base_cfg: WatermarkConfig,
    cue_list: CueList | None = None,
    *,
    n_docs: int = 50,
    seed: int = 42,
    metadata: dict | None = None,
    **run_kwargs,
) -> EvalReport:
    """Re-run the clean condition at each delta and tabulate TPR/FPR/AUROC."""
    if not deltas:
        raise ValueError("deltas must be non-empty")
    rows = []
    for delta in deltas:
        cfg = WatermarkConfig(
            scheme=base_cfg.scheme,
            key=base_cfg.key,
            gamma=base_cfg.gamma,
            delta=float(delta),
            context_width=base_cfg.context_width,
            sweet_entropy_threshold=base_cfg.sweet_entropy_threshold,
            z_threshold=base_cfg.z_threshold,
        )
        ts = run_condition(
            prompts, model, cfg, cue_list, n_docs=n_docs, seed=seed, **run_kwargs
        )
        rows.append(trial_row(ts, cfg, cfg.z_threshold))
    return EvalReport(rows=rows, metadata=dict(metadata or {}))


CSV_COLUMNS = [
    "condition", "scheme", "delta", "gamma", "n_docs",
    "tpr", "fpr", "auroc", "mean_z_marked", "mean_z_raw",
]


def write_report(report: EvalReport, path, fmt: str = "json") -> None:
    """Serialize with a stable field order so equal runs are equal bytes."""
    if fmt == "json":
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    elif fmt == "csv":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, extrasaction="ignore")
            writer.writeheader()
            for row in sorted(
                report.rows,
                key=lambda r: (r["condition"], r["scheme"], r["delta"]),
            ):
                writer.writerow({k: repr(row[k]) if isinstance(row[k], float) else row[k]
                                 for k in CSV_COLUMNS})
    else:
        raise ValueError(f"unknown report format: {fmt!r}")


def read_report(path) -> EvalReport:
    with open(path, encoding="utf-8") as fh:
        return EvalReport.from_dict(json.load(fh))
