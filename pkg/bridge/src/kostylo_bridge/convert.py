"""Drive a tagger over raw text files and write the corpus JSONL format.

The output schema is the interchange contract of the downstream corpus
loader: one JSON object per line with fields id, genre, author, label,
sentences; each token carries surface, tag and a whitespace-derived
eojeol index.  The bridge never imports the downstream package; the file
format is the whole interface.

Conversion is stateless and sequential: the same input files and tagger
version produce byte-identical output.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from pathlib import Path

from .align import align_eojeols
from .errors import AlignmentError, BridgeError
from .metadata import DocumentMeta, read_metadata
from .segment import SPLIT_MODES, split_text
from .taggers import TaggerAdapter, get_tagger


class DocumentSkippedWarning(UserWarning):
    """A document could not be tagged and was left out of the output."""


class EmptyInputWarning(UserWarning):
    """The metadata sidecar lists no documents."""


@dataclass(frozen=True)
class BridgeConfig:
    input_dir: str
    meta_path: str
    tagger: str
    out_path: str
    split_mode: str = "punctuation"


@dataclass(frozen=True)
class SkippedDocument:
    doc_id: str
    reason: str


@dataclass(frozen=True)
class BridgeResult:
    out_path: str
    written: int
    skipped: tuple[SkippedDocument, ...]


def tag_document(
    meta: DocumentMeta, text: str, adapter: TaggerAdapter, split_mode: str
) -> dict:
    """Tag one document into a corpus record.

    Raises AlignmentError when any segment defeats the tagger or the
    alignment, or when the text contains no sentences at all; callers
    skip the document in that case.
    """
    sentences: list[list[dict]] = []
    for segment in split_text(text, split_mode, adapter):
        try:
            morphemes = adapter.analyze(segment)
        except Exception as exc:  # analyzer backends raise library-specific errors
            raise AlignmentError(f"tagger failed on segment {segment!r}: {exc}") from exc
        if not morphemes:
            raise AlignmentError(f"tagger returned no tokens for segment {segment!r}")
        sentences.append(align_eojeols(morphemes, segment))
    if not sentences:
        raise AlignmentError("document has no sentences after segmentation")
    return {
        "id": meta.id,
        "genre": meta.genre,
        "author": meta.author,
        "label": meta.label,
        "sentences": sentences,
    }


def tag_file(config: BridgeConfig) -> BridgeResult:
    """Convert every document the sidecar lists, skipping the un-taggable.

    Each skip is announced with a DocumentSkippedWarning and recorded in
    the returned result.  The output file is written even when empty so
    that downstream tooling always finds it.
    """
    if config.split_mode not in SPLIT_MODES:
        raise BridgeError(
            f"unknown split mode {config.split_mode!r} "
            f"(choose from {', '.join(SPLIT_MODES)})"
        )
    adapter = get_tagger(config.tagger)
    metas = read_metadata(config.meta_path)
    if not metas:
        warnings.warn(
            f"{config.meta_path}: metadata lists no documents; writing an empty corpus",
            EmptyInputWarning,
            stacklevel=2,
        )
    input_dir = Path(config.input_dir)
    records: list[dict] = []
    skipped: list[SkippedDocument] = []

    def skip(meta: DocumentMeta, reason: str) -> None:
        warnings.warn(
            f"skipping document {meta.id!r}: {reason}",
            DocumentSkippedWarning,
            stacklevel=3,
        )
        skipped.append(SkippedDocument(doc_id=meta.id, reason=reason))

    for meta in metas:
        text_path = input_dir / f"{meta.id}.txt"
        try:
            text = text_path.read_text(encoding="utf-8")
        except FileNotFoundError:
            skip(meta, f"text file not found: {text_path.name}")
            continue
        try:
            records.append(tag_document(meta, text, adapter, config.split_mode))
        except AlignmentError as exc:
            skip(meta, str(exc))
    with open(config.out_path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False))
            fh.write("\n")
    return BridgeResult(
        out_path=str(config.out_path),
        written=len(records),
        skipped=tuple(skipped),
    )
