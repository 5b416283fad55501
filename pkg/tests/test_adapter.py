import io
import json
import subprocess
import sys
import textwrap

import numpy as np
import pytest

from cuemark.adapter import AdapterClient, AdapterError, encode_request, serve_adapter
from cuemark.lm import train_ngram, next_distribution


CORPUS = "a b c a b d a c\n"


def make_model():
    return train_ngram([CORPUS.split()], order=2, alpha=0.5)


def serve_in_memory(model, request_lines: bytes) -> list[dict]:
    out = io.BytesIO()
    serve_adapter(model, io.BytesIO(request_lines), out)
    return [json.loads(line) for line in out.getvalue().splitlines()]


def test_serve_round_trip_in_memory():
    model = make_model()
    responses = serve_in_memory(model, encode_request(["a"]))
    assert len(responses) == 1
    resp = responses[0]
    d = next_distribution(model, ["a"])
    assert tuple(resp["tokens"]) == d.support
    assert np.allclose(resp["probs"], d.probs, atol=1e-12)


def test_serve_reports_bad_requests_and_survives():
    model = make_model()
    payload = b'{"v":1,"op":"nope"}\n' + b"not json\n" + encode_request(["a"])
    responses = serve_in_memory(model, payload)
    assert "error" in responses[0]
    assert "error" in responses[1]
    assert "tokens" in responses[2]


def test_serve_top_k_truncates_and_renormalizes():
    model = make_model()
    responses = serve_in_memory(model, encode_request(["a"], top_k=2))
    resp = responses[0]
    assert len(resp["tokens"]) == 2
    assert sum(resp["probs"]) == pytest.approx(1.0, abs=1e-9)


class _PipePair:
    """In-process fake transport: client writes requests, reads canned bytes."""

    def __init__(self, canned: bytes):
        self.reader = io.BytesIO(canned)
        self.writer = io.BytesIO()


def test_client_rejects_malformed_response():
    pipe = _PipePair(b"this is not json\n")
    client = AdapterClient(pipe.reader, pipe.writer, timeout=None)
    with pytest.raises(AdapterError, match="protocol violation"):
        client.query(["a"])


def test_client_rejects_non_normalized_response():
    bad = json.dumps({"v": 1, "tokens": ["a", "b"], "probs": [0.6, 0.3]}) + "\n"
    client = AdapterClient(io.BytesIO(bad.encode()), io.BytesIO(), timeout=None)
    with pytest.raises(AdapterError, match="invalid distribution"):
        client.query(["a"])


def test_client_surfaces_backend_errors():
    bad = json.dumps({"v": 1, "error": "boom"}) + "\n"
    client = AdapterClient(io.BytesIO(bad.encode()), io.BytesIO(), timeout=None)
    with pytest.raises(AdapterError, match="backend error: boom"):
        client.query(["a"])


def test_client_rejects_closed_transport():
    client = AdapterClient(io.BytesIO(b""), io.BytesIO(), timeout=None)
    with pytest.raises(AdapterError, match="transport closed"):
        client.query(["a"])


CHILD_SCRIPT = textwrap.dedent(
    """
    import sys
    from cuemark.adapter import serve_adapter
    from cuemark.lm import train_ngram
    model = train_ngram([open(sys.argv[1]).read().split()], order=2, alpha=0.5)
    serve_adapter(model)
    """
)


def test_loopback_through_child_process(tmp_path):
    corpus_path = tmp_path / "corpus.txt"
    corpus_path.write_text(CORPUS)
    model = make_model()
    with AdapterClient.spawn(
        [sys.executable, "-c", CHILD_SCRIPT, str(corpus_path)], timeout=60
    ) as client:
        for ctx in ([], ["a"], ["b"], ["c"], ["a"], ["zzz"]):
            remote = client.query(ctx)
            local = next_distribution(model, ctx)
            assert remote.support == local.support
            assert np.abs(remote.probs - local.probs).max() <= 1e-9
        assert client.requests_sent == 6


def test_reference_backend_process_speaks_the_protocol(tmp_path):
    """The sibling lm-adapter package serves distributions this client accepts."""
    pytest.importorskip("lm_adapter")
    corpus_path = tmp_path / "corpus.txt"
    corpus_path.write_text("a b c a b d a c\n")
    from lm_adapter import toy_backend

    callback = toy_backend(corpus_path)
    with AdapterClient.spawn(
        [sys.executable, "-m", "lm_adapter", "--corpus", str(corpus_path)], timeout=60
    ) as client:
        for ctx in ([], ["a"], ["b"], ["zzz"], ["x", "c"]):
            remote = client.query(ctx)
            tokens, probs = callback(ctx)
            assert list(remote.support) == tokens
            assert np.abs(remote.probs - np.array(probs)).max() <= 1e-9


def test_spawn_timeout_fires(tmp_path):
    slow = "import time\ntime.sleep(60)\n"
    client = AdapterClient.spawn([sys.executable, "-c", slow], timeout=0.2)
    try:
        with pytest.raises(TimeoutError):
            client.query(["a"])
    finally:
        client._proc.kill()
        client._proc.wait()
