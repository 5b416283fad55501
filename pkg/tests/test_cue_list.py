import math
import random
from collections import Counter

import pytest

from cuemark.cue_list import (
    CueDirection,
    CueList,
    build_cue_list,
    count_cooccurrence,
    entropy_percentile,
    fingerprint_corpus,
    fnv1a_64,
    is_cue,
    load,
    save,
    successor_entropy,
)
from cuemark.tokenizer import PYTHON_LIKE, TokenKind, tokenize


def brute_force_pairs(sequences):
    """Independent recount: plain dict arithmetic over adjacent pairs."""
    counts = Counter()
    totals = Counter()
    for seq in sequences:
        for a, b in zip(seq, seq[1:]):
            counts[(a, b)] += 1
            totals[a] += 1
    return counts, totals


def brute_force_entropy(counts, totals, t):
    vals = [n for (a, _), n in counts.items() if a == t]
    return -sum((n / totals[t]) * math.log(n / totals[t]) for n in vals)


def test_pair_count_example():
    pc = count_cooccurrence([["a", "b", "a", "b", "a"]])
    assert pc.counts[("a", "b")] == 2
    assert pc.counts[("b", "a")] == 2
    assert pc.totals == {"a": 2, "b": 2}
    assert pc.corpus_size == 5
    assert pc.corpus_size >= sum(pc.counts.values()) + 1


def test_single_token_sequence_has_no_pairs():
    pc = count_cooccurrence([["x"]])
    assert pc.counts == {}
    assert pc.corpus_size == 1


def test_pairs_do_not_cross_sequence_boundaries():
    pc = count_cooccurrence([["a", "b"], ["b", "a"]])
    assert pc.counts == {("a", "b"): 1, ("b", "a"): 1}
    assert ("b", "b") not in pc.counts


def test_empty_corpus_rejected():
    with pytest.raises(ValueError, match="empty corpus"):
        count_cooccurrence([])
    with pytest.raises(ValueError, match="empty corpus"):
        count_cooccurrence([[]])


def test_whitespace_tokens_are_not_paired():
    toks = tokenize("a b\nc", PYTHON_LIKE)
    pc = count_cooccurrence([toks])
    assert pc.totals == {"a": 1, "b": 1}
    assert pc.counts == {("a", "b"): 1, ("b", "c"): 1}
    assert pc.corpus_size == 3


def test_merge_is_a_monoid_sum():
    a = count_cooccurrence([["a", "b", "a"]])
    b = count_cooccurrence([["b", "a", "b"]])
    merged = a.merge(b)
    whole = count_cooccurrence([["a", "b", "a"], ["b", "a", "b"]])
    assert merged.counts == whole.counts
    assert merged.totals == whole.totals
    assert merged.corpus_size == whole.corpus_size


def test_entropy_degenerate_and_uniform():
    pc = count_cooccurrence([["t", "x", "t", "x"]])
    assert successor_entropy(pc, "t") == 0.0
    pc2 = count_cooccurrence([["t", "x", "t", "y"]])
    assert successor_entropy(pc2, "t") == pytest.approx(math.log(2), abs=1e-12)


def test_entropy_three_one_split():
    pc = count_cooccurrence([["t", "x", "t", "x", "t", "x", "t", "y"]])
    expected = -(0.75 * math.log(0.75) + 0.25 * math.log(0.25))
    assert successor_entropy(pc, "t") == pytest.approx(expected, abs=1e-12)


def test_entropy_unseen_token():
    pc = count_cooccurrence([["a", "b"]])
    with pytest.raises(ValueError, match="no successors"):
        successor_entropy(pc, "zzz")


def test_entropy_bounds_brute_force():
    rng = random.Random(3)
    for _ in range(20):
        seq = [rng.choice("abcdef") for _ in range(rng.randrange(2, 60))]
        pc = count_cooccurrence([seq])
        for t in pc.totals:
            h = successor_entropy(pc, t)
            n_succ = len(pc.successors(t))
            assert -1e-12 <= h <= math.log(n_succ) + 1e-12


def test_build_cue_list_examples():
    pc = count_cooccurrence([["a", "b", "a", "b"]])
    assert build_cue_list(pc, 0.1).members == frozenset()
    assert build_cue_list(pc, 0.0).members == {"a", "b"}
    low = build_cue_list(pc, 1e9, CueDirection.LOW_ENTROPY)
    assert low.members == {"a", "b"}


def test_build_cue_list_empty_members_is_warning_not_error():
    pc = count_cooccurrence([["a", "b", "a", "b"]])
    cl = build_cue_list(pc, 5.0)
    assert cl.members == frozenset()
    assert cl.warning is not None


def test_build_rejects_bad_beta():
    pc = count_cooccurrence([["a", "b"]])
    with pytest.raises(ValueError):
        build_cue_list(pc, float("nan"))


def test_direction_monotonicity():
    rng = random.Random(11)
    seq = [rng.choice("abcdefgh") for _ in range(300)]
    pc = count_cooccurrence([seq])
    betas = [0.0, 0.3, 0.8, 1.2, 2.0]
    high = [build_cue_list(pc, b, CueDirection.HIGH_ENTROPY).members for b in betas]
    low = [build_cue_list(pc, b, CueDirection.LOW_ENTROPY).members for b in betas]
    for earlier, later in zip(high, high[1:]):
        assert later <= earlier
    for earlier, later in zip(low, low[1:]):
        assert earlier <= later


def test_oracle_equivalence_random_corpora():
    rng = random.Random(99)
    for trial in range(20):
        n_seqs = rng.randrange(1, 4)
        seqs = [
            [rng.choice("abcdefghij") for _ in range(rng.randrange(1, 350))]
            for _ in range(n_seqs)
        ]
        if not any(seqs):
            continue
        pc = count_cooccurrence(seqs)
        counts, totals = brute_force_pairs(seqs)
        assert pc.counts == dict(counts)
        assert pc.totals == dict(totals)
        beta = rng.uniform(0.0, 2.0)
        direction = rng.choice(list(CueDirection))
        got = build_cue_list(pc, beta, direction)
        expected = set()
        for t in totals:
            h = brute_force_entropy(counts, totals, t)
            keep = h >= beta if direction is CueDirection.HIGH_ENTROPY else h < beta
            if keep:
                expected.add(t)
        assert got.members == frozenset(expected)


def test_is_cue_membership_and_kind_filter():
    pc = count_cooccurrence([["a", "b", "a", "c"]])
    cl = build_cue_list(pc, 0.0)
    assert is_cue(cl, "a")
    assert not is_cue(cl, "zzz")
    # a comment text smuggled into the member set still never gates
    tainted = CueList(
        members=cl.members | {"# hi", "  "},
        beta=cl.beta,
        direction=cl.direction,
        corpus_fingerprint=cl.corpus_fingerprint,
    )
    assert not is_cue(tainted, "# hi")
    assert not is_cue(tainted, "  ")
    assert not is_cue(tainted, "# hi", kind=TokenKind.COMMENT)
    assert is_cue(tainted, "a", kind=TokenKind.IDENTIFIER)


def test_comment_successors_counted_but_never_members():
    toks = tokenize("x # one\nx # two\nx # three\n", PYTHON_LIKE)
    pc = count_cooccurrence([toks])
    assert successor_entropy(pc, "x") > 1.0
    cl = build_cue_list(pc, 0.0)
    assert "x" in cl.members
    assert not any(m.startswith("#") for m in cl.members)


def test_save_load_round_trip(tmp_path):
    pc = count_cooccurrence([["a", "b", "a", "c", "tok with space", "a", "é", "a"]])
    cl = build_cue_list(pc, 0.0)
    path = tmp_path / "cues.txt"
    save(cl, path)
    assert load(path) == cl
    # byte-identical across repeated saves
    first = path.read_bytes()
    save(cl, path)
    assert path.read_bytes() == first


def test_load_rejects_truncation_and_versions(tmp_path):
    pc = count_cooccurrence([["a", "b", "a", "c"]])
    cl = build_cue_list(pc, 0.0)
    path = tmp_path / "cues.txt"
    save(cl, path)
    content = path.read_text()

    truncated = tmp_path / "trunc.txt"
    truncated.write_text(content[: len(content) // 2].rsplit("\n", 1)[0] + "\n")
    with pytest.raises(ValueError, match="malformed"):
        load(truncated)

    bumped = tmp_path / "v2.txt"
    bumped.write_text(content.replace("CUELIST v1", "CUELIST v2", 1))
    with pytest.raises(ValueError, match="unsupported version"):
        load(bumped)

    garbage = tmp_path / "junk.txt"
    garbage.write_text("hello\nworld\n")
    with pytest.raises(ValueError, match="malformed"):
        load(garbage)


def test_fingerprint_sensitivity(tmp_path):
    base = b"def f():\n    return 1\n"
    p = tmp_path / "corpus.py"
    p.write_bytes(base)
    original = fingerprint_corpus([p])
    rng = random.Random(5)
    for _ in range(50):
        i = rng.randrange(len(base))
        mutated = bytearray(base)
        mutated[i] = (mutated[i] + rng.randrange(1, 255)) % 256
        p.write_bytes(bytes(mutated))
        assert fingerprint_corpus([p]) != original
    assert fnv1a_64(b"") == 14695981039346656037


def test_entropy_percentile_extremes():
    pc = count_cooccurrence([["a", "b", "a", "c", "b", "b"]])
    lo = entropy_percentile(pc, 0)
    hi = entropy_percentile(pc, 100)
    assert lo <= entropy_percentile(pc, 50) <= hi
    assert build_cue_list(pc, hi).members <= build_cue_list(pc, lo).members
