"""Command-line front end: build-cue-list, generate, detect, attack, evaluate.

Exit codes for `detect`: 0 watermark detected, 1 not detected, 2 error or
insufficient scope, so the command scripts cleanly in CI pipelines.  Every
file-producing subcommand writes a manifest next to its output; manifests
carry the resolved configuration but never the key.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .adapter import AdapterClient, serve_adapter
from .attacks import ATTACKS, code_only_mask
from .corpus import (
    bundled_corpus_dir,
    bundled_prompts_dir,
    corpus_files,
    load_corpus_tokens,
    load_prompts,
)
from .cue_list import (
    CueDirection,
    build_cue_list,
    count_cooccurrence,
    entropy_percentile,
    load as load_cue_list,
    save as save_cue_list,
)
from .evaluation import (
    EvalReport,
    ablation_sweep,
    run_condition,
    trial_row,
    write_report,
)
from .lm import DEFAULT_ALPHA, DEFAULT_ORDER, train_ngram
from .tokenizer import BUILTIN_PROFILES, countable_texts, load_profile, render_token_texts, tokenize
from .watermark import Scheme, WatermarkConfig, detect, generate_watermarked


class CliError(Exception):
    pass


def _resolve_profile(name: str):
    if name in BUILTIN_PROFILES:
        return BUILTIN_PROFILES[name]
    if Path(name).exists():
        return load_profile(name)
    raise CliError(f"unknown profile {name!r} (builtin: {', '.join(BUILTIN_PROFILES)})")


def _resolve_key(args) -> bytes:
    """Hex key from --key-env (preferred; keeps keys out of shell history)
    or --key."""
    raw = None
    if getattr(args, "key_env", None):
        raw = os.environ.get(args.key_env)
        if raw is None:
            raise CliError(f"environment variable {args.key_env} is not set")
    elif getattr(args, "key", None):
        raw = args.key
    if not raw:
        raise CliError("no key given: pass --key <hex> or --key-env <VAR>")
    try:
        key = bytes.fromhex(raw)
    except ValueError as exc:
        raise CliError(f"key is not valid hex: {exc}") from exc
    if not key:
        raise CliError("key must be non-empty")
    return key


def _build_model(args):
    if getattr(args, "adapter_cmd", None):
        return AdapterClient.spawn(args.adapter_cmd)
    corpus = args.model or str(bundled_corpus_dir("train"))
    profile = _resolve_profile(args.profile)
    sequences, _ = load_corpus_tokens(corpus, profile)
    return train_ngram(sequences, order=args.order, alpha=args.alpha)


def _load_cues(args):
    if not getattr(args, "cue_list", None):
        return None
    return load_cue_list(args.cue_list)


def _make_config(args, key: bytes) -> WatermarkConfig:
    return WatermarkConfig(
        scheme=Scheme.parse(args.scheme),
        key=key,
        gamma=args.gamma,
        delta=args.delta,
        context_width=args.context_width,
        sweet_entropy_threshold=args.sweet_threshold,
        z_threshold=args.z_threshold,
    )


def _manifest_args(args) -> dict:
    skip = {"key", "func"}
    out = {}
    for name, value in sorted(vars(args).items()):
        if name in skip:
            continue
        out[name] = value if not isinstance(value, Path) else str(value)
    return out


def write_manifest(output_path, subcommand: str, args, inputs, outputs) -> None:
    manifest = {
        "tool": "cuemark",
        "version": __version__,
        "subcommand": subcommand,
        "arguments": _manifest_args(args),
        "inputs": [str(p) for p in inputs],
        "outputs": [str(p) for p in outputs],
    }
    path = Path(str(output_path) + ".manifest.json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", help="corpus file/dir an n-gram model is trained on")
    p.add_argument("--adapter-cmd", help="external model process speaking the NDJSON protocol")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)


def _add_watermark_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scheme", default="kgw", help="kgw | sweet | ewd | cue")
    p.add_argument("--gamma", type=float, default=0.5)
    p.add_argument("--delta", type=float, default=4.0)
    p.add_argument("--context-width", type=int, default=2)
    p.add_argument("--sweet-threshold", type=float, default=1.0)
    p.add_argument("--z-threshold", type=float, default=2.0)
    p.add_argument("--key", help="watermark key as a hex string")
    p.add_argument("--key-env", help="environment variable holding the hex key")
    p.add_argument("--cue-list", help="cue-list file (required for the cue scheme)")


def _positive_seed(value: str) -> int:
    return int(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuemark",
        description="Green/red-list watermarking toolkit for generated code.",
    )
    parser.add_argument("--version", action="version", version=f"cuemark {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("build-cue-list", help="build a cue list from a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--beta", type=float, help="explicit entropy threshold (nats)")
    p.add_argument("--beta-percentile", type=float, default=75.0)
    p.add_argument("--cue-direction", choices=["high", "low"], default="high")
    p.add_argument("--profile", default="python-like")
    p.set_defaults(func=cmd_build_cue_list)

    p = sub.add_parser("generate", help="sample a watermarked continuation")
    p.add_argument("--prompt-file", required=True)
    _add_model_flags(p)
    _add_watermark_flags(p)
    p.add_argument("--profile", default="python-like")
    p.add_argument("--seed", type=_positive_seed, default=42)
    p.add_argument("--max-tokens", type=int, default=300)
    p.add_argument("--temperature", type=float, default=1.0)
    p.add_argument("--greedy", action="store_true", help="temperature-0 decoding")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("detect", help="score a file for the watermark")
    p.add_argument("--input", required=True)
    _add_model_flags(p)
    _add_watermark_flags(p)
    p.add_argument("--profile", default="python-like")
    p.add_argument("--scope", choices=["full", "code-only"], default="full")
    p.add_argument("--trace", action="store_true", help="include the per-token trace")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("attack", help="apply a semantics-preserving transformation")
    p.add_argument("--kind", choices=sorted(ATTACKS), default="comment-removal")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--profile", default="python-like")
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("evaluate", help="run the TPR/FPR/AUROC harness")
    p.add_argument("--corpus", help="training corpus (default: bundled)")
    p.add_argument("--prompts", help="prompt directory (default: bundled)")
    p.add_argument("--schemes", default="kgw,cue")
    p.add_argument("--deltas", default="4.0")
    p.add_argument("--conditions", default="clean,comment-removed")
    p.add_argument("--n-docs", type=int, default=200)
    p.add_argument("--max-tokens", type=int, default=300)
    p.add_argument("--seed", type=_positive_seed, default=42)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
    p.add_argument("--gamma", type=float, default=0.5)
    p.add_argument("--context-width", type=int, default=2)
    p.add_argument("--sweet-threshold", type=float, default=1.0)
    p.add_argument("--z-threshold", type=float, default=2.0)
    p.add_argument("--beta-percentile", type=float, default=75.0)
    p.add_argument("--key", help="watermark key as a hex string")
    p.add_argument("--key-env", help="environment variable holding the hex key")
    p.add_argument("--cue-list", help="prebuilt cue list (default: built from corpus)")
    p.add_argument("--profile", default="python-like")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("serve-adapter", help="serve the toy model over stdio")
    _add_model_flags(p)
    p.add_argument("--profile", default="python-like")
    p.set_defaults(func=cmd_serve_adapter)

    return parser


def cmd_build_cue_list(args) -> int:
    profile = _resolve_profile(args.profile)
    sequences, fingerprint = load_corpus_tokens(args.corpus, profile)
    pc = count_cooccurrence(sequences, profile, fingerprint=fingerprint)
    beta = args.beta if args.beta is not None else entropy_percentile(pc, args.beta_percentile)
    direction = CueDirection(args.cue_direction)
    cues = build_cue_list(pc, beta, direction)
    save_cue_list(cues, args.out)
    write_manifest(args.out, "build-cue-list", args, corpus_files(args.corpus), [args.out])
    percentiles = {p: entropy_percentile(pc, p) for p in (25, 50, 75, 90)}
    print(f"cue list: {len(cues.members)} members, beta={beta:.6f} ({direction.value})")
    print(
        "successor entropy percentiles: "
        + " ".join(f"p{p}={v:.3f}" for p, v in percentiles.items())
    )
    if cues.warning:
        print(f"warning: {cues.warning}", file=sys.stderr)
    return 0


def cmd_generate(args) -> int:
    key = _resolve_key(args)
    cfg = _make_config(args, key)
    cues = _load_cues(args)
    if cfg.scheme is Scheme.CUE and cues is None:
        raise CliError("cue list required: pass --cue-list with --scheme cue")
    profile = _resolve_profile(args.profile)
    prompt_text = Path(args.prompt_file).read_text(encoding="utf-8")
    prompt = countable_texts(tokenize(prompt_text, profile))
    model = _build_model(args)
    try:
        emitted = generate_watermarked(
            model,
            prompt,
            cfg,
            cues,
            rng=np.random.default_rng(args.seed),
            max_tokens=args.max_tokens,
            temperature=0.0 if args.greedy else args.temperature,
            profile=profile,
        )
    finally:
        if isinstance(model, AdapterClient):
            model.close()
    rendered = render_token_texts(emitted, profile)
    if args.out:
        Path(args.out).write_text(rendered + "\n", encoding="utf-8")
        write_manifest(args.out, "generate", args, [args.prompt_file], [args.out])
    else:
        print(rendered)
    return 0


def cmd_detect(args) -> int:
    key = _resolve_key(args)
    cfg = _make_config(args, key)
    cues = _load_cues(args)
    scheme = cfg.scheme
    if scheme is Scheme.CUE and cues is None:
        raise CliError("cue list required: pass --cue-list with --scheme cue")
    model = None
    if scheme in (Scheme.SWEET, Scheme.EWD):
        if not (args.model or args.adapter_cmd):
            raise CliError(f"--model is required for {scheme.value} detection")
        model = _build_model(args)
    profile = _resolve_profile(args.profile)
    tokens = tokenize(Path(args.input).read_text(encoding="utf-8"), profile)
    mask = code_only_mask(tokens) if args.scope == "code-only" else None
    try:
        report = detect(tokens, cfg, cues, model, mask=mask, with_trace=args.trace)
    finally:
        if isinstance(model, AdapterClient):
            model.close()
    print(json.dumps(report.to_dict(include_trace=args.trace), indent=2, sort_keys=True))
    if report.insufficient_scope:
        print("insufficient scope: no scoreable positions", file=sys.stderr)
        return 2
    return 0 if report.verdict else 1


def cmd_attack(args) -> int:
    profile = _resolve_profile(args.profile)
    tokens = tokenize(Path(args.input).read_text(encoding="utf-8"), profile)
    result = ATTACKS[args.kind](tokens, profile)
    from .tokenizer import detokenize

    Path(args.output).write_text(detokenize(result.tokens), encoding="utf-8")
    write_manifest(args.output, "attack", args, [args.input], [args.output])
    print(
        f"{args.kind}: removed {result.removed_count} tokens "
        f"({result.removed_byte_fraction:.1%} of bytes)"
    )
    return 0


def cmd_evaluate(args) -> int:
    key = _resolve_key(args)
    profile = _resolve_profile(args.profile)
    corpus = args.corpus or str(bundled_corpus_dir("train"))
    prompts_dir = args.prompts or str(bundled_prompts_dir())
    sequences, fingerprint = load_corpus_tokens(corpus, profile)
    model = train_ngram(sequences, order=args.order, alpha=args.alpha)
    if args.cue_list:
        cues = load_cue_list(args.cue_list)
    else:
        pc = count_cooccurrence(sequences, profile, fingerprint=fingerprint)
        cues = build_cue_list(pc, entropy_percentile(pc, args.beta_percentile))
    prompts = load_prompts(prompts_dir, profile)

    schemes = [Scheme.parse(s) for s in args.schemes.split(",") if s]
    deltas = [float(d) for d in args.deltas.split(",") if d]
    conditions = [c.strip() for c in args.conditions.split(",") if c.strip()]
    rows = []
    for scheme in schemes:
        base = WatermarkConfig(
            scheme=scheme,
            key=key,
            gamma=args.gamma,
            delta=deltas[0],
            context_width=args.context_width,
            sweet_entropy_threshold=args.sweet_threshold,
            z_threshold=args.z_threshold,
        )
        for condition in conditions:
            attack = None
            scope = "full"
            if condition == "comment-removed":
                attack = ATTACKS["comment-removal"]
            elif condition == "whitespace-normalized":
                attack = ATTACKS["whitespace"]
            elif condition == "code-only":
                scope = "code-only"
            elif condition != "clean":
                raise CliError(f"unknown condition {condition!r}")
            for delta in deltas:
                cfg = WatermarkConfig(
                    scheme=scheme,
                    key=key,
                    gamma=args.gamma,
                    delta=delta,
                    context_width=args.context_width,
                    sweet_entropy_threshold=args.sweet_threshold,
                    z_threshold=args.z_threshold,
                )
                ts = run_condition(
                    prompts,
                    model,
                    cfg,
                    cues,
                    attack=attack,
                    n_docs=args.n_docs,
                    seed=args.seed,
                    condition=condition,
                    scope=scope,
                    max_tokens=args.max_tokens,
                    profile=profile,
                )
                rows.append(trial_row(ts, cfg, args.z_threshold))
    report = EvalReport(
        rows=rows,
        metadata={
            "seed": args.seed,
            "n_docs": args.n_docs,
            "corpus_fingerprint": f"{fingerprint:016x}",
            "order": args.order,
            "alpha": args.alpha,
            "beta": cues.beta,
            "cue_members": len(cues.members),
            "schemes": [s.value for s in schemes],
            "deltas": deltas,
            "conditions": conditions,
        },
    )
    write_report(report, args.out, args.format)
    write_manifest(args.out, "evaluate", args, corpus_files(corpus), [args.out])
    for row in rows:
        print(
            f"{row['condition']:>18} {row['scheme']:>6} delta={row['delta']:<5g} "
            f"tpr={row['tpr']:.3f} fpr={row['fpr']:.3f} auroc={row['auroc']:.4f}"
        )
    return 0


def cmd_serve_adapter(args) -> int:
    model = _build_model(args)
    serve_adapter(model)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
