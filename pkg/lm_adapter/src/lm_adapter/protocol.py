"""Server side of the NDJSON next-token distribution protocol.

Frames (canonical JSON: sorted keys, compact separators, UTF-8):

  request:  {"context":["tok",...],"op":"dist","top_k":0,"v":1}
  response: {"probs":[...],"tokens":[...],"v":1}
  error:    {"error":"message","v":1}

Responses go out in request order, one per request.  A bad request or a
crashing backend produces an error frame, never a dead session: the caller
owns the process lifetime and hangs are worse than errors.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field

PROTOCOL_VERSION = 1
SUM_TOLERANCE = 1e-6


def _encode(obj: dict) -> bytes:
    return (json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n").encode("utf-8")


def _error(message: str) -> bytes:
    return _encode({"v": PROTOCOL_VERSION, "error": message})


class ProtocolError(ValueError):
    pass


def parse_request(line: bytes) -> tuple[list[str], int]:
    """Validate one request line; returns (context, top_k)."""
    try:
        req = json.loads(line.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ProtocolError(f"bad request: {exc}") from exc
    if not isinstance(req, dict) or req.get("v") != PROTOCOL_VERSION:
        raise ProtocolError("unsupported request version")
    if req.get("op") != "dist":
        raise ProtocolError(f"unknown op: {req.get('op')!r}")
    context = req.get("context")
    if not isinstance(context, list) or not all(isinstance(t, str) for t in context):
        raise ProtocolError("context must be a list of strings")
    top_k = req.get("top_k", 0)
    if not isinstance(top_k, bool) and isinstance(top_k, int) and top_k >= 0:
        return context, top_k
    raise ProtocolError("top_k must be a non-negative integer")


def validate_distribution(tokens, probs) -> tuple[list[str], list[float]]:
    """Enforce the response invariants on a backend's output."""
    tokens = list(tokens)
    probs = [float(p) for p in probs]
    if not tokens or len(tokens) != len(probs):
        raise ProtocolError("backend returned mismatched tokens/probs")
    if len(set(tokens)) != len(tokens):
        raise ProtocolError("backend returned duplicate tokens")
    if any(p < 0 for p in probs):
        raise ProtocolError("backend returned negative probability")
    if abs(sum(probs) - 1.0) > SUM_TOLERANCE:
        raise ProtocolError("backend distribution does not sum to 1")
    return tokens, probs


def apply_top_k(tokens, probs, top_k: int) -> tuple[list[str], list[float]]:
    if top_k <= 0 or top_k >= len(tokens):
        return tokens, probs
    order = sorted(range(len(tokens)), key=lambda i: (-probs[i], tokens[i]))[:top_k]
    order.sort()
    kept = [tokens[i] for i in order]
    weights = [probs[i] for i in order]
    total = sum(weights)
    return kept, [w / total for w in weights]


@dataclass
class AdapterSession:
    """One transport's worth of serving state and counters."""

    in_stream: object
    out_stream: object
    version: int = PROTOCOL_VERSION
    requests_served: int = 0
    errors: int = 0
    _closed: bool = field(default=False, repr=False)

    def handle_line(self, line: bytes, callback) -> None:
        try:
            context, top_k = parse_request(line)
            tokens, probs = callback(context)
            tokens, probs = validate_distribution(tokens, probs)
            tokens, probs = apply_top_k(tokens, probs, top_k)
        except ProtocolError as exc:
            self.errors += 1
            self.out_stream.write(_error(str(exc)))
        except Exception as exc:  # backend raised: report, keep serving
            self.errors += 1
            self.out_stream.write(_error(f"backend failure: {exc}"))
        else:
            self.requests_served += 1
            self.out_stream.write(
                _encode({"v": PROTOCOL_VERSION, "tokens": tokens, "probs": probs})
            )
        self.out_stream.flush()

    def run(self, callback) -> None:
        for raw in iter(self.in_stream.readline, b""):
            if not raw.strip():
                continue
            self.handle_line(raw, callback)
        self._closed = True


def serve(distribution_callback, in_stream=None, out_stream=None) -> AdapterSession:
    """Serve until the input stream closes; returns the finished session.

    `distribution_callback(context) -> (tokens, probs)` with probs summing
    to 1 within 1e-6; anything else is rejected with an error frame.
    """
    session = AdapterSession(
        in_stream if in_stream is not None else sys.stdin.buffer,
        out_stream if out_stream is not None else sys.stdout.buffer,
    )
    session.run(distribution_callback)
    return session
