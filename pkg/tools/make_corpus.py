#!/usr/bin/env python3
"""Regenerates the bundled snippet corpus under src/cuemark/data/.

The corpus is synthetic on purpose: it is license-clean, deterministic
(seeded), and shaped so the toy n-gram model reproduces the entropy profile
of real generated code at desk scale:

  * "family" code chunks are frozen token chains (low entropy under an
    order-3 model, and pairwise-unique so repeated bigrams stay rare),
  * a handful of designated slots (function names, numeric values) branch
    over small fixed pools (high entropy, watermarkable),
  * comments are drawn from a sparse successor graph over a fixed pool, so
    comment regions stay diverse (high entropy) and make up roughly a third
    of the non-layout tokens.

Every random choice is table-driven with a bounded branch factor, which
keeps all order-2 contexts that generation can reach covered by corpus
counts (a pure additive-smoothing model has no backoff, so an uncovered
context would degenerate to uniform sampling).
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

FAMILY_WORDS = [
    "grid", "path", "node", "edge", "rank", "slot", "span", "leaf", "pool",
    "heap", "mask", "byte", "word", "line", "page", "cell", "disk", "lock",
    "task", "tick", "seed", "gain", "norm", "step", "fold", "clip", "trim",
    "pack", "scan", "sort", "mix", "map", "key", "bin", "tag", "arc",
    "bus", "car", "dot", "fan", "gear", "hub", "ink", "jet", "kit", "log",
    "mast", "net", "oar", "pin", "quay", "rod", "sail", "tile", "urn",
    "vane", "web", "yarn", "zone", "axle",
]

VERB_PREFIXES = ("load", "check", "apply", "emit", "sync")
CHUNK_ARG_SUFFIXES = ("src", "tmp", "out", "fin", "aux")
SLOT_SUFFIXES = ("val", "acc", "buf")

COMMENT_TOPICS = [
    "buffer", "cursor", "offset", "length", "window", "stride", "margin",
    "weight", "counter", "timeout", "retry", "cache", "header", "footer",
    "record", "column", "row", "field", "label", "marker",
]
COMMENT_VERBS = [
    "reset", "advance", "validate", "shrink", "grow", "flush", "rebuild",
    "align", "merge", "split", "probe", "update",
]
COMMENT_TAILS = [
    "before the next pass", "for the slow path", "when the queue drains",
    "after each batch", "on overflow", "for small inputs", "once per round",
    "unless already done", "to keep bounds tight", "in the common case",
    "while the lock is held", "during warmup",
]

# Slot values are named constants rather than short numeric literals: the
# keyed hash folds its 64-bit state to 32 bits, and tokens that differ only
# in their final byte or two land on nearly identical hash values, which
# would make a pool of small integers share one green/red verdict per
# context.  Names with early, varied bytes get independent verdicts.
VALUE_PREFIXES = [
    "max", "min", "top", "base", "half", "full", "peak", "mean", "unit",
    "safe", "hard", "soft", "raw", "net", "gross",
]
VALUE_ROOTS = [
    "depth", "width", "limit", "ratio", "scale", "bound", "quota", "share",
    "spread", "margin_pts", "gap", "rate_bp",
]
NUM_LITERALS = [str(v) for v in (8, 16, 32, 64, 128, 256, 512, 1024)]

N_COMMENTS = 96
COMMENT_BRANCH = 4
VALUES_PER_FAMILY = 6
FNAMES_PER_ENDER = 5
ENTRY_BRANCH = 4


def _value_pool(rng: random.Random) -> list[str]:
    pool = sorted({f"{a}_{b}" for a in VALUE_PREFIXES for b in VALUE_ROOTS})
    rng.shuffle(pool)
    return pool[:60]


def _comment_pool(rng: random.Random) -> list[str]:
    pool = set()
    while len(pool) < N_COMMENTS:
        pool.add(
            "# {} the {} {}".format(
                rng.choice(COMMENT_VERBS),
                rng.choice(COMMENT_TOPICS),
                rng.choice(COMMENT_TAILS),
            )
        )
    return sorted(pool)


class Tables:
    """Fixed transition tables; all corpus randomness flows through these."""

    def __init__(self, rng: random.Random):
        self.comments = _comment_pool(rng)
        self.comment_succ = {
            c: rng.sample([d for d in self.comments if d != c], COMMENT_BRANCH)
            for c in self.comments
        }
        self.families = list(FAMILY_WORDS)
        self.fname = {w: f"calc_{w}" for w in self.families}
        self.family_of_fname = {v: k for k, v in self.fname.items()}
        self.args = {w: (f"{w}_in", f"{w}_cfg") for w in self.families}
        self.chunks = {
            w: [
                (f"{verb}_{w}", "(", f"{w}_{suffix}", ")")
                for verb, suffix in zip(VERB_PREFIXES, CHUNK_ARG_SUFFIXES)
            ]
            for w in self.families
        }
        self.slot_vars = {
            w: [f"{w}_{s}" for s in SLOT_SUFFIXES] for w in self.families
        }
        self.values = _value_pool(rng)
        self.family_values = {
            w: rng.sample(self.values, VALUES_PER_FAMILY) for w in self.families
        }
        self.family_dim = {
            w: rng.choice(NUM_LITERALS) for w in self.families
        }
        # header-ender comment -> allowed function names (branch for (c, def))
        self.fnames_by_ender = {
            c: [self.fname[w] for w in rng.sample(self.families, FNAMES_PER_ENDER)]
            for c in self.comments
        }
        # per-family comment entry points inside the block body
        self.entry_after_colon = {
            w: rng.sample(self.comments, ENTRY_BRANCH) for w in self.families
        }
        self.entry_after_chunk = {
            (w, i): rng.sample(self.comments, ENTRY_BRANCH)
            for w in self.families
            for i in range(len(VERB_PREFIXES))
        }
        # per-value entry points (branch for the (=, value) context)
        self.entry_after_value = {
            v: rng.sample(self.comments, ENTRY_BRANCH) for v in self.values
        }
        # block-boundary entry points keyed by the previous block's family
        self.entry_after_block = {
            w: rng.sample(self.comments, ENTRY_BRANCH) for w in self.families
        }
        self.file_openers = rng.sample(self.comments, ENTRY_BRANCH)


def _comment_run(t: Tables, rng: random.Random, entry: str, max_extra: int) -> list[str]:
    run = [entry]
    for _ in range(rng.randrange(0, max_extra + 1)):
        run.append(rng.choice(t.comment_succ[run[-1]]))
    return run


def make_block(t: Tables, rng: random.Random, prev_family: str | None) -> tuple[list[str], str]:
    """Render one def block; returns (lines, family).

    Placement is deliberate: the verbs after the dim number and after the
    first value slot read their sampling context from tokens that survive
    comment removal, while the other chunk verbs follow comment runs, so
    their watermark evidence dies with the comments.
    """
    if prev_family is None:
        entry = rng.choice(t.file_openers)
    else:
        entry = rng.choice(t.entry_after_block[prev_family])
    header = _comment_run(t, rng, entry, 5)
    fname = rng.choice(t.fnames_by_ender[header[-1]])
    w = t.family_of_fname[fname]
    a, b = t.args[w]
    chunk_lines = [" ".join(chunk) for chunk in t.chunks[w]]
    slot_vars = t.slot_vars[w]
    vals = [rng.choice(t.family_values[w]) for _ in range(3)]

    lines = list(header)
    lines.append(f"def {fname}({a}, {b}):")
    body: list[str] = []
    body.extend(_comment_run(t, rng, rng.choice(t.entry_after_colon[w]), 4))
    body.append(f"{w}_dim = {t.family_dim[w]}")
    body.append(chunk_lines[0])
    body.extend(_comment_run(t, rng, rng.choice(t.entry_after_chunk[(w, 0)]), 4))
    body.append(chunk_lines[1])
    body.append(f"{slot_vars[0]} = {vals[0]}")
    body.append(chunk_lines[2])
    body.extend(_comment_run(t, rng, rng.choice(t.entry_after_chunk[(w, 2)]), 4))
    body.append(chunk_lines[3])
    body.append(f"{slot_vars[1]} = {vals[1]}")
    body.extend(_comment_run(t, rng, rng.choice(t.entry_after_value[vals[1]]), 4))
    body.append(f"{slot_vars[2]} = {vals[2]}")
    body.append(chunk_lines[4])
    body.extend(_comment_run(t, rng, rng.choice(t.entry_after_chunk[(w, 4)]), 4))
    body.append(f"return {slot_vars[0]}")
    lines.extend("    " + ln for ln in body)
    lines.append("")
    return lines, w


def make_file(t: Tables, rng: random.Random, n_blocks: int) -> str:
    lines: list[str] = []
    family = None
    for _ in range(n_blocks):
        block, family = make_block(t, rng, family)
        lines.extend(block)
    return "\n".join(lines).rstrip("\n") + "\n"


def make_prompt(t: Tables, rng: random.Random) -> str:
    """A block prefix ending just after the first frozen chunk line."""
    block, _ = make_block(t, rng, None)
    cut = next(i for i, ln in enumerate(block) if ln.strip().startswith("load_")) + 1
    return "\n".join(block[:cut]) + "\n"


DIVERSE_STEMS = "br cr dr fl gl gr pl pr sc sk sl sm sn sp st sw tr tw ch sh".split()
DIVERSE_VOWELS = "a e i o u ai ea io ou ue".split()
DIVERSE_ENDS = "b ck d ft g k ld lk lt m mp n nd nk p rd rk rn rt s sk sp ss t x".split()


def make_diverse_file(rng: random.Random, n_tokens: int, branch: int = 24) -> str:
    """Identifier soup from a sparse random successor graph.

    The pair space is huge and nearly uniformly visited, which is what the
    detector's null statistics need: no token pair dominates, so per-key
    green-list draws average out instead of biasing every document the same
    way.
    """
    vocab = sorted(
        {
            f"{s}{v}{e}"
            for s in DIVERSE_STEMS
            for v in DIVERSE_VOWELS
            for e in DIVERSE_ENDS
        }
    )
    rng.shuffle(vocab)
    vocab = vocab[:1600]
    succ = {w: rng.sample(vocab, branch) for w in vocab}
    walk = [rng.choice(vocab)]
    for _ in range(n_tokens - 1):
        walk.append(rng.choice(succ[walk[-1]]))
    lines = [" ".join(walk[i:i + 8]) for i in range(0, len(walk), 8)]
    return "\n".join(lines) + "\n"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=None, help="data directory (default: package data)")
    parser.add_argument("--seed", type=int, default=20240811)
    parser.add_argument("--train-files", type=int, default=8)
    parser.add_argument("--blocks-per-file", type=int, default=48)
    parser.add_argument("--heldout-files", type=int, default=2)
    parser.add_argument("--heldout-blocks", type=int, default=18)
    parser.add_argument("--prompts", type=int, default=16)
    parser.add_argument("--diverse-tokens", type=int, default=60000)
    args = parser.parse_args()

    out = Path(args.out) if args.out else Path(__file__).resolve().parent.parent / "src/cuemark/data"
    rng = random.Random(args.seed)
    tables = Tables(rng)

    train_dir = out / "corpus" / "train"
    heldout_dir = out / "corpus" / "heldout"
    diverse_dir = out / "corpus" / "diverse"
    prompt_dir = out / "prompts"
    for d in (train_dir, heldout_dir, diverse_dir, prompt_dir):
        d.mkdir(parents=True, exist_ok=True)

    for i in range(args.train_files):
        (train_dir / f"snippets_{i:02d}.py").write_text(
            make_file(tables, rng, args.blocks_per_file), encoding="utf-8"
        )
    for i in range(args.heldout_files):
        (heldout_dir / f"heldout_{i:02d}.py").write_text(
            make_file(tables, rng, args.heldout_blocks), encoding="utf-8"
        )
    for i in range(args.prompts):
        (prompt_dir / f"prompt_{i:02d}.txt").write_text(
            make_prompt(tables, rng), encoding="utf-8"
        )
    (diverse_dir / "soup_00.py").write_text(
        make_diverse_file(rng, args.diverse_tokens), encoding="utf-8"
    )
    print(f"wrote corpus under {out}")


if __name__ == "__main__":
    main()
