"""Corpus and prompt loading helpers shared by the CLI and the harness."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .cue_list import fingerprint_corpus
from .tokenizer import LanguageProfile, PYTHON_LIKE, countable_texts, tokenize


def _data_root() -> Path:
    return Path(str(resources.files("cuemark"))) / "data"


def bundled_corpus_dir(shard: str = "train") -> Path:
    return _data_root() / "corpus" / shard


def bundled_prompts_dir() -> Path:
    return _data_root() / "prompts"


def corpus_files(path) -> list[Path]:
    """Regular files under `path` (or the file itself), sorted by name."""
    p = Path(path)
    if p.is_file():
        return [p]
    if not p.is_dir():
        raise FileNotFoundError(f"corpus path does not exist: {p}")
    files = sorted(q for q in p.rglob("*") if q.is_file())
    if not files:
        raise ValueError(f"empty corpus: {p}")
    return files


def load_corpus_tokens(path, profile: LanguageProfile = PYTHON_LIKE):
    """Tokenize every corpus file; returns (token sequences, fingerprint)."""
    files = corpus_files(path)
    sequences = [tokenize(f.read_text(encoding="utf-8"), profile) for f in files]
    return sequences, fingerprint_corpus(files)


def load_prompts(path, profile: LanguageProfile = PYTHON_LIKE) -> list[list[str]]:
    """Each prompt file becomes a list of non-layout token texts."""
    prompts = []
    for f in corpus_files(path):
        texts = countable_texts(tokenize(f.read_text(encoding="utf-8"), profile))
        if texts:
            prompts.append(texts)
    if not prompts:
        raise ValueError(f"no usable prompts under {path}")
    return prompts
