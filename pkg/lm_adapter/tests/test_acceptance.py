"""Acceptance: the served distributions must survive the process boundary.

Spawns the real CLI as a child process and compares every distribution
against the in-process toy model on a 50-context fixture; also replays the
frozen transcript through the executable.  Run with -s for the PASS lines.
"""

import json
import subprocess
import sys
from pathlib import Path

from lm_adapter import toy_backend

CORPUS = Path(__file__).parent / "data" / "tiny_corpus.txt"


def report_line(name: str, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'}: {name} -- {detail}")
    assert ok, f"{name}: {detail}"


def spawn_adapter():
    return subprocess.Popen(
        [sys.executable, "-m", "lm_adapter", "--corpus", str(CORPUS)],
        stdin=subprocess.PIPE,
        stdout=subprocess.PIPE,
    )


def test_loopback_matches_in_process_model():
    callback = toy_backend(CORPUS)
    vocab = ["alpha", "beta", "gamma", "delta", "unseen"]
    contexts = [[]] + [[a] for a in vocab] + [
        [vocab[i % 5], vocab[(i * 7 + 2) % 5]] for i in range(44)
    ]
    assert len(contexts) == 50

    proc = spawn_adapter()
    worst = 0.0
    try:
        for ctx in contexts:
            req = json.dumps(
                {"v": 1, "op": "dist", "context": ctx, "top_k": 0},
                sort_keys=True, separators=(",", ":"),
            )
            proc.stdin.write(req.encode() + b"\n")
            proc.stdin.flush()
            resp = json.loads(proc.stdout.readline())
            tokens, probs = callback(ctx)
            assert resp["tokens"] == tokens
            assert len(resp["probs"]) == len(probs)
            worst = max(
                worst, max(abs(a - b) for a, b in zip(resp["probs"], probs))
            )
    finally:
        proc.stdin.close()
        proc.wait(timeout=10)
    report_line(
        "adapter loopback",
        worst <= 1e-9,
        f"max |dp|={worst:.2e} over 50 contexts through the child process",
    )


def test_golden_transcript_through_child_process():
    from test_protocol import GOLDEN_REQUEST, GOLDEN_RESPONSE

    proc = spawn_adapter()
    out, _ = proc.communicate(GOLDEN_REQUEST, timeout=30)
    report_line(
        "golden transcript replay",
        out == GOLDEN_RESPONSE,
        f"{len(out)} bytes, byte-identical={out == GOLDEN_RESPONSE}",
    )
