import io
import json
from pathlib import Path

import pytest

from lm_adapter import serve, toy_backend
from lm_adapter.protocol import (
    AdapterSession,
    ProtocolError,
    apply_top_k,
    parse_request,
    validate_distribution,
)

CORPUS = Path(__file__).parent / "data" / "tiny_corpus.txt"


def run_serve(callback, payload: bytes):
    out = io.BytesIO()
    session = serve(callback, io.BytesIO(payload), out)
    return session, out.getvalue()


def encode(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n").encode()


def uniform2(context):
    return ["a", "b"], [0.5, 0.5]


def test_echo_callback_roundtrip():
    session, out = run_serve(uniform2, encode({"v": 1, "op": "dist", "context": [], "top_k": 0}))
    assert json.loads(out) == {"v": 1, "tokens": ["a", "b"], "probs": [0.5, 0.5]}
    assert session.requests_served == 1
    assert session.errors == 0


def test_crashing_callback_reports_and_survives():
    def explode(context):
        raise RuntimeError("boom")

    payload = encode({"v": 1, "op": "dist", "context": [], "top_k": 0}) * 2
    session, out = run_serve(explode, payload)
    lines = [json.loads(l) for l in out.splitlines()]
    assert len(lines) == 2
    assert all("boom" in l["error"] for l in lines)
    assert session.errors == 2
    assert session.requests_served == 0


def test_unnormalized_callback_rejected():
    def lopsided(context):
        return ["a", "b"], [0.6, 0.3]

    _, out = run_serve(lopsided, encode({"v": 1, "op": "dist", "context": [], "top_k": 0}))
    assert "sum to 1" in json.loads(out)["error"]


@pytest.mark.parametrize(
    "tokens,probs,message",
    [
        (["a"], [0.5, 0.5], "mismatched"),
        (["a", "a"], [0.5, 0.5], "duplicate"),
        (["a", "b"], [1.5, -0.5], "negative"),
        ([], [], "mismatched"),
        (["a", "b"], [0.5 + 2e-6, 0.5], "sum to 1"),
    ],
)
def test_validate_distribution_defects(tokens, probs, message):
    with pytest.raises(ProtocolError, match=message):
        validate_distribution(tokens, probs)


def test_validate_accepts_tolerance_band():
    tokens, probs = validate_distribution(["a", "b"], [0.5 + 4e-7, 0.5])
    assert tokens == ["a", "b"]


def test_parse_request_defects():
    with pytest.raises(ProtocolError, match="bad request"):
        parse_request(b"not json")
    with pytest.raises(ProtocolError, match="version"):
        parse_request(b'{"v":2,"op":"dist","context":[]}')
    with pytest.raises(ProtocolError, match="unknown op"):
        parse_request(b'{"v":1,"op":"generate","context":[]}')
    with pytest.raises(ProtocolError, match="list of strings"):
        parse_request(b'{"v":1,"op":"dist","context":[1]}')
    with pytest.raises(ProtocolError, match="top_k"):
        parse_request(b'{"v":1,"op":"dist","context":[],"top_k":-1}')


def test_malformed_requests_do_not_kill_session():
    payload = b"garbage\n" + encode({"v": 1, "op": "dist", "context": [], "top_k": 0})
    session, out = run_serve(uniform2, payload)
    lines = [json.loads(l) for l in out.splitlines()]
    assert "error" in lines[0]
    assert lines[1]["tokens"] == ["a", "b"]
    assert (session.requests_served, session.errors) == (1, 1)


def test_blank_lines_skipped():
    payload = b"\n \n" + encode({"v": 1, "op": "dist", "context": [], "top_k": 0})
    session, _ = run_serve(uniform2, payload)
    assert session.requests_served == 1


def test_apply_top_k():
    tokens, probs = apply_top_k(["a", "b", "c"], [0.2, 0.5, 0.3], 2)
    assert tokens == ["b", "c"]
    assert probs == pytest.approx([0.625, 0.375])
    assert apply_top_k(["a"], [1.0], 0) == (["a"], [1.0])


def test_responses_in_request_order():
    def labelled(context):
        return ["".join(context) or "empty"], [1.0]

    payload = b"".join(
        encode({"v": 1, "op": "dist", "context": [c], "top_k": 0}) for c in "abc"
    )
    _, out = run_serve(labelled, payload)
    got = [json.loads(l)["tokens"][0] for l in out.splitlines()]
    assert got == ["a", "b", "c"]


# Golden transcript: request and response byte streams recorded once from
# the fixture corpus and frozen.  Any framing or serialization drift breaks
# this byte-for-byte.
GOLDEN_REQUEST = (
    b'{"context":[],"op":"dist","top_k":0,"v":1}\n'
    b'{"context":["alpha"],"op":"dist","top_k":0,"v":1}\n'
    b'{"context":["x","gamma"],"op":"dist","top_k":0,"v":1}\n'
    b'{"context":["unseen"],"op":"dist","top_k":0,"v":1}\n'
    b'{"context":["alpha"],"op":"dist","top_k":1,"v":1}\n'
    b'{"op":"nope","v":1}\n'
)
GOLDEN_RESPONSE = (
    b'{"probs":[0.3333333333333333,0.3333333333333333,0.3333333333333333],'
    b'"tokens":["alpha","beta","gamma"],"v":1}\n'
    b'{"probs":[0.6666666666666666,0.3333333333333333],"tokens":["beta","gamma"],"v":1}\n'
    b'{"probs":[0.25,0.5,0.25],"tokens":["alpha","beta","gamma"],"v":1}\n'
    b'{"probs":[0.3333333333333333,0.3333333333333333,0.3333333333333333],'
    b'"tokens":["alpha","beta","gamma"],"v":1}\n'
    b'{"probs":[1.0],"tokens":["beta"],"v":1}\n'
    b'{"error":"unknown op: \'nope\'","v":1}\n'
)


def test_golden_transcript_replays_identically():
    session, out = run_serve(toy_backend(CORPUS), GOLDEN_REQUEST)
    assert out == GOLDEN_RESPONSE
    assert (session.requests_served, session.errors) == (5, 1)
