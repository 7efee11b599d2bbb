"""Reconstruct eojeol indices by aligning tagger output with source text.

An eojeol is a whitespace-delimited unit of the source sentence.  Tagger
surfaces are consumed left to right against those units; every surface
must sit entirely inside one eojeol and the units must be covered exactly,
so that concatenating the surfaces of an eojeol's tokens reproduces the
source string.  Analyzers that normalize surfaces (e.g. expanding a
contraction) break this property, and the document is skipped rather than
emitted with wrong indices.
"""

from __future__ import annotations

from typing import Sequence

from .errors import AlignmentError


def align_eojeols(
    morphemes: Sequence[tuple[str, str]], sentence_text: str
) -> list[dict]:
    """Return token records with eojeol indices for one sentence.

    `morphemes` are (surface, tag) pairs in source order.  Raises
    AlignmentError when the surfaces do not tile the sentence's eojeols.
    """
    eojeols = sentence_text.split()
    tokens: list[dict] = []
    index = 0
    offset = 0
    for surface, tag in morphemes:
        if not isinstance(surface, str) or surface == "":
            raise AlignmentError("tagger produced an empty surface")
        if not isinstance(tag, str) or tag == "":
            raise AlignmentError(f"tagger produced an empty tag for surface {surface!r}")
        while index < len(eojeols) and offset == len(eojeols[index]):
            index += 1
            offset = 0
        if index >= len(eojeols):
            raise AlignmentError(
                f"surface {surface!r} extends past the end of sentence {sentence_text!r}"
            )
        if not eojeols[index].startswith(surface, offset):
            raise AlignmentError(
                f"surface {surface!r} does not match eojeol {eojeols[index]!r} "
                f"at offset {offset}"
            )
        tokens.append({"surface": surface, "tag": tag, "eojeol": index})
        offset += len(surface)
    while index < len(eojeols) and offset == len(eojeols[index]):
        index += 1
        offset = 0
    if index < len(eojeols):
        raise AlignmentError(
            f"eojeol {eojeols[index]!r} not fully covered by tagger output"
        )
    return tokens
