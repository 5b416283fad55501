import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuemark.tokenizer import (
    BUILTIN_PROFILES,
    C_LIKE,
    PYTHON_LIKE,
    LanguageProfile,
    Token,
    TokenKind,
    classify_text,
    countable_texts,
    detokenize,
    load_profile,
    render_token_texts,
    tokenize,
)


def oracle_lex_kinds(source, line_marker="#"):
    """Independent character-class oracle: maps each char to a coarse class.

    Covers sources without strings or block comments; used to cross-check
    kind assignment without reusing the lexer's scanning logic.
    """
    classes = []
    i = 0
    while i < len(source):
        c = source[i]
        if source.startswith(line_marker, i):
            while i < len(source) and source[i] != "\n":
                classes.append("comment")
                i += 1
            continue
        if c == "\n":
            classes.append("newline")
        elif c in " \t":
            classes.append("whitespace")
        elif c.isascii() and (c.isalpha() or c == "_"):
            classes.append("ident")
        elif c.isascii() and c.isdigit():
            if classes and classes[-1] == "ident":
                classes.append("ident")  # identifier continuation
            else:
                classes.append("number")
        elif (
            c == "."
            and classes
            and classes[-1] == "number"
            and i + 1 < len(source)
            and source[i + 1].isdigit()
        ):
            classes.append("number")  # decimal point inside a literal
        else:
            classes.append("op")
        i += 1
    return classes


KIND_TO_CLASS = {
    TokenKind.IDENTIFIER: "ident",
    TokenKind.NUMBER: "number",
    TokenKind.COMMENT: "comment",
    TokenKind.OPERATOR: "op",
    TokenKind.NEWLINE: "newline",
    TokenKind.WHITESPACE: "whitespace",
}


def test_empty_input():
    assert tokenize("") == []
    assert detokenize([]) == ""


def test_example_line():
    toks = tokenize("x = 1  # hi", PYTHON_LIKE)
    assert [(t.text, t.kind) for t in toks] == [
        ("x", TokenKind.IDENTIFIER),
        (" ", TokenKind.WHITESPACE),
        ("=", TokenKind.OPERATOR),
        (" ", TokenKind.WHITESPACE),
        ("1", TokenKind.NUMBER),
        ("  ", TokenKind.WHITESPACE),
        ("# hi", TokenKind.COMMENT),
    ]


def test_example_line_matches_char_class_oracle():
    src = "x = 1  # hi\ny2 += 30.5\n"
    toks = tokenize(src, PYTHON_LIKE)
    expanded = []
    for t in toks:
        expanded.extend([KIND_TO_CLASS[t.kind]] * len(t.text))
    assert expanded == oracle_lex_kinds(src)


def test_spans_are_contiguous_bytes():
    src = "a = 'héllo'  # ünicode\n"
    toks = tokenize(src, PYTHON_LIKE)
    assert toks[0].span == (0, 1)
    pos = 0
    for t in toks:
        assert t.span[0] == pos
        assert t.span[1] - t.span[0] == len(t.text.encode("utf-8"))
        pos = t.span[1]
    assert pos == len(src.encode("utf-8"))


def test_comment_removed_equals_string_subtraction():
    src = "x = 1  # hi"
    toks = tokenize(src, PYTHON_LIKE)
    kept = [t for t in toks if t.kind is not TokenKind.COMMENT]
    assert detokenize(kept) == src.replace("# hi", "")


@pytest.mark.parametrize(
    "src,profile",
    [
        ("def f(a, b):\n    return a + b\n", PYTHON_LIKE),
        ('s = "a \\" b" + \'c\'\n', PYTHON_LIKE),
        ('"""block\ncomment"""\nx = 1\n', PYTHON_LIKE),
        ("'''also\nremoved'''\n", PYTHON_LIKE),
        ("int x = 1; // note\n/* multi\nline */\n", C_LIKE),
        ("a /*unterminated", C_LIKE),
        ('"unterminated string', PYTHON_LIKE),
        ("x\r\ny\rz\n", PYTHON_LIKE),
        ("émoji 🙂 and\x00control", PYTHON_LIKE),
        ("0x1F 1.5 2. .3", PYTHON_LIKE),
    ],
)
def test_round_trip_fixtures(src, profile):
    assert detokenize(tokenize(src, profile)) == src


def test_string_and_comment_single_tokens():
    toks = tokenize('"""doc"""\ns = "lit # not comment"\n# real\n', PYTHON_LIKE)
    kinds = [t.kind for t in toks if t.kind not in (TokenKind.WHITESPACE, TokenKind.NEWLINE)]
    assert kinds == [
        TokenKind.COMMENT,
        TokenKind.IDENTIFIER,
        TokenKind.OPERATOR,
        TokenKind.STRING,
        TokenKind.COMMENT,
    ]


def test_comment_closure_line_and_block():
    src = "a // tail\n/* x // y */ b\n"
    toks = tokenize(src, C_LIKE)
    comments = [t.text for t in toks if t.kind is TokenKind.COMMENT]
    assert comments == ["// tail", "/* x // y */"]


def test_c_like_comment_after_operator():
    toks = tokenize("a=//note\n", C_LIKE)
    assert [(t.text, t.kind) for t in toks[:3]] == [
        ("a", TokenKind.IDENTIFIER),
        ("=", TokenKind.OPERATOR),
        ("//note", TokenKind.COMMENT),
    ]


def test_operator_maximal_munch():
    toks = tokenize("a==b->c(d):e", PYTHON_LIKE)
    ops = [t.text for t in toks if t.kind is TokenKind.OPERATOR]
    assert ops == ["==", "->", "(", ")", ":"]


def test_determinism():
    src = "def f():\n  # c\n  return 1.5 == x\n"
    assert tokenize(src) == tokenize(src)


def test_kind_is_pure_function_of_text():
    src = "alpha beta # c\n'lit' 42"
    for t in tokenize(src, PYTHON_LIKE):
        assert classify_text(t.text, PYTHON_LIKE) == t.kind


@settings(max_examples=200)
@given(st.text())
def test_round_trip_random_python_like(s):
    assert detokenize(tokenize(s, PYTHON_LIKE)) == s


@settings(max_examples=200)
@given(st.text())
def test_round_trip_random_c_like(s):
    assert detokenize(tokenize(s, C_LIKE)) == s


@settings(max_examples=100)
@given(st.text(alphabet="ab#'\"\\\n \t=/*(", max_size=40))
def test_round_trip_marker_heavy(s):
    for profile in (PYTHON_LIKE, C_LIKE):
        toks = tokenize(s, profile)
        assert detokenize(toks) == s
        pos = 0
        for t in toks:
            assert t.span[0] == pos
            pos = t.span[1]


def test_profile_immutable_and_validated():
    with pytest.raises(Exception):
        PYTHON_LIKE.name = "other"
    with pytest.raises(ValueError):
        LanguageProfile("bad", ("#",), (("", "*/"),), ())
    with pytest.raises(ValueError):
        LanguageProfile("bad", ("",), (), ())


def test_load_profile(tmp_path):
    path = tmp_path / "toy.profile"
    path.write_text(
        "name = toy\n"
        "line_comment = ;\n"
        "block_comment = (* *)\n"
        "string = \"\n",
        encoding="utf-8",
    )
    prof = load_profile(path)
    assert prof.name == "toy"
    toks = tokenize("x ; note\n(* blk *) 'q'\n", prof)
    kinds = {t.text: t.kind for t in toks}
    assert kinds["; note"] is TokenKind.COMMENT
    assert kinds["(* blk *)"] is TokenKind.COMMENT
    assert kinds["'"] is TokenKind.OPERATOR  # not a string delimiter in this profile
    assert "python-like" in BUILTIN_PROFILES


def test_load_profile_rejects_garbage(tmp_path):
    path = tmp_path / "bad.profile"
    path.write_text("nonsense line\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_profile(path)


def test_countable_texts_filters_layout():
    toks = tokenize("x = 1  # hi\n", PYTHON_LIKE)
    assert countable_texts(toks) == ["x", "=", "1", "# hi"]
    assert countable_texts(["a", "b"]) == ["a", "b"]


def test_render_round_trips_generated_stream():
    texts = ["def", "calc", "(", "a", ",", "b", ")", ":", "# note", "return", "a"]
    rendered = render_token_texts(texts, PYTHON_LIKE)
    assert countable_texts(tokenize(rendered, PYTHON_LIKE)) == texts


def test_render_separates_fusing_pairs():
    assert render_token_texts(["x", "y"], PYTHON_LIKE) == "x y"
    assert render_token_texts(["=", "="], PYTHON_LIKE) == "= ="
    assert render_token_texts(["# c", "x"], PYTHON_LIKE) == "# c\nx"
    assert render_token_texts([], PYTHON_LIKE) == ""


def test_render_random_streams():
    rng = random.Random(7)
    pool = ["def", "f", "(", ")", ":", "=", "x", "1", "27", "# c", "+", "return", "'s'"]
    for _ in range(50):
        texts = [rng.choice(pool) for _ in range(rng.randrange(1, 30))]
        rendered = render_token_texts(texts, PYTHON_LIKE)
        assert countable_texts(tokenize(rendered, PYTHON_LIKE)) == texts
