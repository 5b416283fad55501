"""Semantics-preserving transformations that stress watermark detectability.

The headline attack strips comments: cheap for an adversary, harmless to
the code, and fatal to schemes that park their signal in natural language.
Everything here works on lexer tokens and re-lexes its output, so results
feed straight back into detection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tokenizer import (
    LAYOUT_KINDS,
    LanguageProfile,
    PYTHON_LIKE,
    Token,
    TokenKind,
    countable_texts,
    detokenize,
    tokenize,
)


@dataclass
class AttackResult:
    tokens: list[Token]
    removed_count: int
    removed_byte_fraction: float


def _byte_len(tokens) -> int:
    return sum(len(t.text.encode("utf-8")) for t in tokens)


def _relex(texts_or_source, profile: LanguageProfile) -> list[Token]:
    source = texts_or_source if isinstance(texts_or_source, str) else "".join(texts_or_source)
    return tokenize(source, profile)


def remove_comments(tokens, profile: LanguageProfile = PYTHON_LIKE) -> AttackResult:
    """Drop every comment token; collapse whitespace left dangling by a drop.

    A whitespace token directly before a removed comment is dropped too when
    the comment ended its line, so no line gains trailing blanks it did not
    already have.  If removing a comment would fuse its neighbours into one
    token, a single space is inserted to keep the survivor stream intact.
    """
    tokens = list(tokens)
    keep = [True] * len(tokens)
    removed = 0
    for i, tok in enumerate(tokens):
        if tok.kind is not TokenKind.COMMENT:
            continue
        keep[i] = False
        removed += 1
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None
        if nxt is None or nxt.kind is TokenKind.NEWLINE:
            j = i - 1
            if j >= 0 and keep[j] and tokens[j].kind is TokenKind.WHITESPACE:
                keep[j] = False

    pieces: list[str] = []
    last_text: str | None = None
    for i, tok in enumerate(tokens):
        if not keep[i]:
            continue
        if last_text is not None and i > 0 and not keep[i - 1]:
            # the direct predecessor was removed: guard against token fusion
            merged = tokenize(last_text + tok.text, profile)
            if len(merged) < 2 or merged[0].text != last_text:
                pieces.append(" ")
        pieces.append(tok.text)
        last_text = tok.text

    original_bytes = _byte_len(tokens)
    survivors = _relex(pieces, profile)
    surviving_bytes = _byte_len(survivors)
    fraction = 0.0
    if original_bytes:
        fraction = max(0.0, (original_bytes - surviving_bytes) / original_bytes)
    return AttackResult(survivors, removed, fraction)


def normalize_whitespace(tokens, profile: LanguageProfile = PYTHON_LIKE) -> AttackResult:
    """Collapse every run of intra-line whitespace to a single space."""
    tokens = list(tokens)
    changed = 0
    pieces = []
    for tok in tokens:
        if tok.kind is TokenKind.WHITESPACE and tok.text != " ":
            pieces.append(" ")
            changed += 1
        else:
            pieces.append(tok.text)
    original_bytes = _byte_len(tokens)
    survivors = _relex(pieces, profile)
    fraction = 0.0
    if original_bytes:
        fraction = max(0.0, (original_bytes - _byte_len(survivors)) / original_bytes)
    return AttackResult(survivors, changed, fraction)


def code_only_mask(tokens) -> list[bool]:
    """True exactly at positions detection may score when natural-language
    content is ruled out: code tokens, not comments, not layout."""
    return [
        t.kind is not TokenKind.COMMENT and t.kind not in LAYOUT_KINDS
        for t in tokens
    ]


ATTACKS = {
    "comment-removal": remove_comments,
    "whitespace": normalize_whitespace,
}
