"""Sentence segmentation policies.

Three modes:

- tagger: the analyzer's own segmenter (not every backend has one)
- punctuation: cut after runs of sentence-final punctuation
- line: every non-blank line is a sentence, for poetry and other text
  that carries no terminal punctuation
"""

from __future__ import annotations

from .errors import BridgeError
from .taggers import TaggerAdapter

SPLIT_MODES = ("tagger", "punctuation", "line")

_TERMINATORS = frozenset(".!?…")
# Closing quotes and brackets stay with the sentence they terminate.
_CLOSERS = frozenset("”’\"')]」』")


def split_punctuation(text: str) -> list[str]:
    """Cut after each run of terminators plus any trailing closers."""
    pieces: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in _TERMINATORS:
            while i + 1 < n and text[i + 1] in _TERMINATORS:
                i += 1
            while i + 1 < n and text[i + 1] in _CLOSERS:
                i += 1
            pieces.append(text[start : i + 1])
            start = i + 1
        i += 1
    if start < n:
        pieces.append(text[start:])
    return [piece.strip() for piece in pieces if piece.strip()]


def split_lines(text: str) -> list[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


def split_text(text: str, mode: str, adapter: TaggerAdapter) -> list[str]:
    """Segment a document into sentences under the given mode."""
    if mode == "punctuation":
        return split_punctuation(text)
    if mode == "line":
        return split_lines(text)
    if mode == "tagger":
        sentences = adapter.split_sentences(text)
        if sentences is None:
            raise BridgeError(
                f"tagger {adapter.name!r} has no sentence segmenter; "
                f"use --split-mode punctuation or line"
            )
        return [sent.strip() for sent in sentences if sent.strip()]
    raise BridgeError(f"unknown split mode {mode!r} (choose from {', '.join(SPLIT_MODES)})")
