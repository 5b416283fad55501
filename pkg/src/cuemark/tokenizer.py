"""Deterministic lossless lexer shared by injection, detection, and attacks.

Watermark injection and detection only agree if both sides see identical
token boundaries, so this lexer is rule-based, profile-driven, and free of
any randomness or global state.  It is not a language grammar: it knows just
enough to isolate comments, string literals, identifiers, numbers, and
operator punctuation, and it never fails on weird input (unknown bytes
become OTHER tokens).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class TokenKind(enum.Enum):
    IDENTIFIER = "identifier"
    NUMBER = "number"
    STRING = "string"
    COMMENT = "comment"
    OPERATOR = "operator"
    NEWLINE = "newline"
    WHITESPACE = "whitespace"
    OTHER = "other"


# Layout tokens are trivially editable and carry no watermark signal: they are
# excluded from pair counting, model vocabulary, hash contexts, and scoring.
LAYOUT_KINDS = frozenset({TokenKind.WHITESPACE, TokenKind.NEWLINE})


@dataclass(frozen=True)
class Token:
    text: str
    kind: TokenKind
    span: tuple[int, int]  # byte offsets into the UTF-8 encoding of the source

    def byte_len(self) -> int:
        return self.span[1] - self.span[0]


@dataclass(frozen=True)
class LanguageProfile:
    """Comment/string syntax of a language family.  Immutable."""

    name: str
    line_comment_markers: tuple[str, ...]
    block_comment_delimiters: tuple[tuple[str, str], ...]
    string_delimiters: tuple[str, ...]

    def __post_init__(self) -> None:
        for open_, close in self.block_comment_delimiters:
            if not open_ or not close:
                raise ValueError("block comment delimiters must be non-empty")
        for m in self.line_comment_markers:
            if not m:
                raise ValueError("line comment markers must be non-empty")
        for d in self.string_delimiters:
            if not d:
                raise ValueError("string delimiters must be non-empty")


# Triple-quoted strings are lexed as COMMENT on purpose: for the attack modules
# they count as removable natural language, like docstrings in practice.
PYTHON_LIKE = LanguageProfile(
    name="python-like",
    line_comment_markers=("#",),
    block_comment_delimiters=(('"""', '"""'), ("'''", "'''")),
    string_delimiters=('"', "'"),
)

C_LIKE = LanguageProfile(
    name="c-like",
    line_comment_markers=("//",),
    block_comment_delimiters=(("/*", "*/"),),
    string_delimiters=('"', "'"),
)

BUILTIN_PROFILES = {p.name: p for p in (PYTHON_LIKE, C_LIKE)}

_IDENT_START = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT_CONT = _IDENT_START | frozenset("0123456789")
_DIGITS = frozenset("0123456789")
_INLINE_WS = frozenset(" \t\f\v")

# Longest-match operator table.  Multi-character entries first; any ASCII
# punctuation not claimed by the active profile falls through to a
# single-character operator.
_MULTI_OPERATORS = (
    "**=", "//=", "<<=", ">>=", "...", "->", "=>", "==", "!=", "<=", ">=",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "**", "//", "<<", ">>",
    "&&", "||", "::", "++", "--", ":=", "~=",
)
_OPERATOR_CHARS = frozenset("!\"#$%&'()*+,-./:;<=>?@[\\]^`{|}~")


def load_profile(path) -> LanguageProfile:
    """Read a profile from a small key=value text file.

    Keys: ``name`` (once), ``line_comment``, ``string`` (value taken
    literally), and ``block_comment`` (open and close separated by
    whitespace).  Repeated keys accumulate.
    """
    name = None
    line_markers: list[str] = []
    blocks: list[tuple[str, str]] = []
    strings: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key = key.strip()
            value = value.strip()
            if key == "name":
                name = value
            elif key == "line_comment":
                line_markers.append(value)
            elif key == "block_comment":
                parts = value.split()
                if len(parts) != 2:
                    raise ValueError(
                        f"{path}:{lineno}: block_comment needs open and close"
                    )
                blocks.append((parts[0], parts[1]))
            elif key == "string":
                strings.append(value)
            else:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
    if name is None:
        raise ValueError(f"{path}: missing name")
    return LanguageProfile(name, tuple(line_markers), tuple(blocks), tuple(strings))


def _scan_string(source: str, i: int, delim: str) -> int:
    """Return the end index of a string literal starting at i (delim included).

    Backslash escapes the next character.  Unterminated literals extend to
    the end of input: losslessness beats strictness here.
    """
    j = i + len(delim)
    n = len(source)
    while j < n:
        if source[j] == "\\":
            j += 2
        elif source.startswith(delim, j):
            return j + len(delim)
        else:
            j += 1
    return n


def tokenize(source: str, profile: LanguageProfile = PYTHON_LIKE) -> list[Token]:
    """Lex source into a lossless, contiguous token sequence.

    Concatenating the token texts reproduces the input exactly; spans are
    contiguous byte offsets.  Deterministic: equal inputs give equal output.
    """
    line_markers = sorted(profile.line_comment_markers, key=len, reverse=True)
    blocks = sorted(profile.block_comment_delimiters, key=lambda p: len(p[0]), reverse=True)
    strings = sorted(profile.string_delimiters, key=len, reverse=True)
    # Operator munching must never swallow the start of a comment or string.
    boundary_markers = tuple(line_markers) + tuple(o for o, _ in blocks) + tuple(strings)

    out: list[tuple[str, TokenKind]] = []
    i = 0
    n = len(source)
    while i < n:
        c = source[i]

        if c == "\r":
            end = i + 2 if source.startswith("\r\n", i) else i + 1
            out.append((source[i:end], TokenKind.NEWLINE))
            i = end
            continue
        if c == "\n":
            out.append(("\n", TokenKind.NEWLINE))
            i += 1
            continue
        if c in _INLINE_WS:
            j = i + 1
            while j < n and source[j] in _INLINE_WS:
                j += 1
            out.append((source[i:j], TokenKind.WHITESPACE))
            i = j
            continue

        marker = next((m for m in line_markers if source.startswith(m, i)), None)
        if marker is not None:
            j = i + len(marker)
            while j < n and source[j] not in ("\n", "\r"):
                j += 1
            out.append((source[i:j], TokenKind.COMMENT))
            i = j
            continue

        block = next((b for b in blocks if source.startswith(b[0], i)), None)
        if block is not None:
            open_, close = block
            idx = source.find(close, i + len(open_))
            end = n if idx < 0 else idx + len(close)
            out.append((source[i:end], TokenKind.COMMENT))
            i = end
            continue

        delim = next((d for d in strings if source.startswith(d, i)), None)
        if delim is not None:
            end = _scan_string(source, i, delim)
            out.append((source[i:end], TokenKind.STRING))
            i = end
            continue

        if c in _IDENT_START:
            j = i + 1
            while j < n and source[j] in _IDENT_CONT:
                j += 1
            out.append((source[i:j], TokenKind.IDENTIFIER))
            i = j
            continue

        if c in _DIGITS:
            j = i + 1
            while j < n and source[j] in _DIGITS:
                j += 1
            if j < n and source[j] == "." and j + 1 < n and source[j + 1] in _DIGITS:
                j += 2
                while j < n and source[j] in _DIGITS:
                    j += 1
            out.append((source[i:j], TokenKind.NUMBER))
            i = j
            continue

        if c in _OPERATOR_CHARS:
            text = c
            for op in _MULTI_OPERATORS:
                if source.startswith(op, i) and not any(
                    source.startswith(m, i + k)
                    for k in range(1, len(op))
                    for m in boundary_markers
                ):
                    text = op
                    break
            out.append((text, TokenKind.OPERATOR))
            i += len(text)
            continue

        out.append((c, TokenKind.OTHER))
        i += 1

    tokens: list[Token] = []
    offset = 0
    for text, kind in out:
        blen = len(text.encode("utf-8"))
        tokens.append(Token(text, kind, (offset, offset + blen)))
        offset += blen
    return tokens


def detokenize(tokens) -> str:
    """Concatenate token texts.  Inverse of tokenize for untouched sequences."""
    return "".join(t.text for t in tokens)


def classify_text(text: str, profile: LanguageProfile = PYTHON_LIKE) -> TokenKind | None:
    """Kind of a standalone token text, or None if it lexes into several tokens."""
    toks = tokenize(text, profile)
    if len(toks) != 1:
        return None
    return toks[0].kind


def countable_texts(tokens, profile: LanguageProfile | None = None) -> list[str]:
    """Texts of the non-layout tokens, in order.

    Accepts Token sequences or plain strings (strings are assumed already
    filtered).
    """
    out = []
    for t in tokens:
        if isinstance(t, str):
            out.append(t)
        elif t.kind not in LAYOUT_KINDS:
            out.append(t.text)
    return out


class TokenJoiner:
    """Joins generated token texts back into source text.

    The model emits only non-layout tokens, so adjacent texts can fuse when
    concatenated (``def`` + ``f`` -> ``deff``).  The joiner inserts the
    smallest separator ("", " ", or a newline after line comments) that keeps
    every emitted token a token on re-lexing, so detection sees exactly the
    generated sequence.
    """

    _CANDIDATES = ("", " ", "\n")

    def __init__(self, profile: LanguageProfile = PYTHON_LIKE):
        self.profile = profile
        self._memo: dict[tuple[str, str], str] = {}

    def _separator(self, a: str, b: str) -> str:
        key = (a, b)
        sep = self._memo.get(key)
        if sep is None:
            for cand in self._CANDIDATES:
                lexed = countable_texts(tokenize(a + cand + b, self.profile))
                if lexed == [a, b]:
                    sep = cand
                    break
            else:
                raise ValueError(f"no separator keeps {a!r} and {b!r} apart")
            self._memo[key] = sep
        return sep

    def join(self, texts) -> str:
        texts = list(texts)
        if not texts:
            return ""
        parts = [texts[0]]
        for prev, cur in zip(texts, texts[1:]):
            parts.append(self._separator(prev, cur))
            parts.append(cur)
        rendered = "".join(parts)
        if countable_texts(tokenize(rendered, self.profile)) != texts:
            raise ValueError("rendered text does not re-lex to the token sequence")
        return rendered


def render_token_texts(texts, profile: LanguageProfile = PYTHON_LIKE) -> str:
    return TokenJoiner(profile).join(texts)
