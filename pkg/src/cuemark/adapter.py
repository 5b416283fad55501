"""NDJSON bridge for serving next-token distributions across a byte stream.

One request line, one response line, in order.  Canonical frames:

  request:  {"v":1,"op":"dist","context":["tok",...],"top_k":0}
  response: {"v":1,"tokens":[...],"probs":[...]}   (probs sum to 1 +/- 1e-6)
  error:    {"v":1,"error":"message"}

The transport is any pair of byte streams: a child process's stdio or a
connected local socket's file objects.  Clients keep a single request in
flight per transport; open more transports for parallelism.
"""

from __future__ import annotations

import io
import json
import os
import select
import shlex
import subprocess
import sys

import numpy as np

from .lm import Distribution, next_distribution

PROTOCOL_VERSION = 1
SUM_TOLERANCE = 1e-6


class AdapterError(Exception):
    """Protocol violation, backend failure, or invalid distribution."""


def encode_request(context, top_k: int = 0) -> bytes:
    obj = {"v": PROTOCOL_VERSION, "op": "dist", "context": list(context), "top_k": top_k}
    return _encode(obj)


def _encode(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n").encode("utf-8")


def _truncate_top_k(tokens, probs, top_k: int):
    if top_k <= 0 or top_k >= len(tokens):
        return list(tokens), list(probs)
    order = sorted(range(len(tokens)), key=lambda i: (-probs[i], tokens[i]))[:top_k]
    order.sort()
    kept_tokens = [tokens[i] for i in order]
    kept_probs = np.array([probs[i] for i in order], dtype=float)
    kept_probs /= kept_probs.sum()
    return kept_tokens, kept_probs.tolist()


def serve_adapter(model, in_stream=None, out_stream=None) -> int:
    """Serve `model` until the input stream closes; returns requests served.

    Malformed requests produce an error frame and the loop continues, so a
    confused client cannot wedge the server.
    """
    in_stream = in_stream if in_stream is not None else sys.stdin.buffer
    out_stream = out_stream if out_stream is not None else sys.stdout.buffer
    served = 0
    for raw in iter(in_stream.readline, b""):
        if not raw.strip():
            continue
        try:
            req = json.loads(raw.decode("utf-8"))
            if not isinstance(req, dict) or req.get("v") != PROTOCOL_VERSION:
                raise ValueError("unsupported request version")
            if req.get("op") != "dist":
                raise ValueError(f"unknown op: {req.get('op')!r}")
            context = req.get("context")
            if not isinstance(context, list) or not all(isinstance(t, str) for t in context):
                raise ValueError("context must be a list of strings")
            top_k = req.get("top_k", 0)
            if not isinstance(top_k, int) or top_k < 0:
                raise ValueError("top_k must be a non-negative integer")
            dist = next_distribution(model, context)
            tokens, probs = _truncate_top_k(dist.support, dist.probs.tolist(), top_k)
            out_stream.write(_encode({"v": PROTOCOL_VERSION, "tokens": tokens, "probs": probs}))
            served += 1
        except Exception as exc:  # noqa: BLE001 - report and keep serving
            out_stream.write(_encode({"v": PROTOCOL_VERSION, "error": str(exc)}))
        out_stream.flush()
    return served


class _LineReader:
    """Buffered line reader over a raw pipe/socket fd with optional timeout."""

    def __init__(self, stream):
        self._stream = stream
        try:
            self._fd = stream.fileno()
        except (AttributeError, OSError, ValueError, io.UnsupportedOperation):
            self._fd = None
        self._buf = b""

    def read_line(self, timeout: float | None = None) -> bytes:
        while b"\n" not in self._buf:
            if self._fd is None:
                chunk = self._stream.readline()
                if not chunk:
                    break
                self._buf += chunk
                if b"\n" in self._buf:
                    break
                continue
            if timeout is not None:
                ready, _, _ = select.select([self._fd], [], [], timeout)
                if not ready:
                    raise TimeoutError("adapter response timed out")
            chunk = os.read(self._fd, 65536)
            if not chunk:
                break
            self._buf += chunk
        line, sep, rest = self._buf.partition(b"\n")
        if not sep and not line:
            raise AdapterError("protocol violation: transport closed")
        self._buf = rest
        return line


class AdapterClient:
    """Client side of the protocol; usable wherever an NGramModel is.

    `next_distribution(context)` matches the in-process model interface, so
    generation and detection accept either without caring which.
    """

    def __init__(self, in_stream, out_stream, timeout: float | None = 30.0, proc=None):
        self._writer = out_stream
        self._reader = _LineReader(in_stream)
        self._timeout = timeout
        self._proc = proc
        self.requests_sent = 0

    @classmethod
    def spawn(cls, cmd, timeout: float | None = 30.0) -> "AdapterClient":
        argv = shlex.split(cmd) if isinstance(cmd, str) else list(cmd)
        proc = subprocess.Popen(argv, stdin=subprocess.PIPE, stdout=subprocess.PIPE)
        return cls(proc.stdout, proc.stdin, timeout=timeout, proc=proc)

    def query(self, context, top_k: int = 0) -> Distribution:
        self._writer.write(encode_request(context, top_k))
        self._writer.flush()
        self.requests_sent += 1
        line = self._reader.read_line(self._timeout)
        try:
            resp = json.loads(line.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise AdapterError(f"protocol violation: {exc}") from exc
        if not isinstance(resp, dict) or resp.get("v") != PROTOCOL_VERSION:
            raise AdapterError("protocol violation: bad version")
        if "error" in resp:
            raise AdapterError(f"backend error: {resp['error']}")
        tokens = resp.get("tokens")
        probs = resp.get("probs")
        if (
            not isinstance(tokens, list)
            or not isinstance(probs, list)
            or len(tokens) != len(probs)
            or not tokens
            or not all(isinstance(t, str) for t in tokens)
            or not all(isinstance(p, (int, float)) for p in probs)
        ):
            raise AdapterError("protocol violation: malformed response")
        arr = np.array(probs, dtype=float)
        if len(set(tokens)) != len(tokens) or np.any(arr < 0):
            raise AdapterError("invalid distribution")
        if abs(float(arr.sum()) - 1.0) > SUM_TOLERANCE:
            raise AdapterError("invalid distribution")
        arr /= arr.sum()
        return Distribution(tuple(tokens), arr)

    def next_distribution(self, context) -> Distribution:
        return self.query(context)

    def close(self) -> None:
        try:
            self._writer.close()
        except Exception:
            pass
        if self._proc is not None:
            self._proc.wait(timeout=10)

    def __enter__(self) -> "AdapterClient":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def query_adapter(client: AdapterClient, context) -> Distribution:
    return client.query(context)
