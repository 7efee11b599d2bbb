"""Metadata sidecar: one CSV row of id/genre/author/label per document.

The sidecar sits next to the text files; each row's text lives in
`<id>.txt` under the input directory.  Validation mirrors the corpus
schema the bridge emits, so a clean sidecar guarantees loadable output.
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass

from .errors import BridgeError

META_FIELDS = ("id", "genre", "author", "label")
GENRES = ("essay", "poetry", "paper_abstract")
HUMAN_AUTHOR = "human"


class UnknownColumnWarning(UserWarning):
    """Extra sidecar columns are ignored, not rejected."""


@dataclass(frozen=True)
class DocumentMeta:
    id: str
    genre: str
    author: str
    label: int


def _require(condition: bool, row_no: int, message: str) -> None:
    if not condition:
        raise BridgeError(f"metadata row {row_no}: {message}")


def read_metadata(path) -> list[DocumentMeta]:
    """Read and validate the sidecar, preserving row order."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [name for name in META_FIELDS if name not in header]
        if missing:
            raise BridgeError(
                f"{path}: metadata is missing columns {missing} (header: {header})"
            )
        extra = [name for name in header if name not in META_FIELDS]
        if extra:
            warnings.warn(
                f"{path}: ignoring unknown metadata columns {extra}",
                UnknownColumnWarning,
                stacklevel=2,
            )
        rows: list[DocumentMeta] = []
        seen: dict[str, int] = {}
        for row_no, row in enumerate(reader, start=2):
            doc_id = (row["id"] or "").strip()
            _require(doc_id != "", row_no, "id must be non-empty")
            _require(
                "/" not in doc_id and "\\" not in doc_id and doc_id not in (".", ".."),
                row_no,
                f"id {doc_id!r} is not usable as a file name",
            )
            if doc_id in seen:
                raise BridgeError(
                    f"metadata row {row_no}: duplicate id {doc_id!r} "
                    f"(first seen on row {seen[doc_id]})"
                )
            seen[doc_id] = row_no
            genre = (row["genre"] or "").strip()
            _require(genre in GENRES, row_no, f"genre must be one of {GENRES}, got {genre!r}")
            author = (row["author"] or "").strip()
            _require(author != "", row_no, "author must be non-empty")
            raw_label = (row["label"] or "").strip()
            _require(raw_label in ("0", "1"), row_no, f"label must be 0 or 1, got {raw_label!r}")
            label = int(raw_label)
            _require(
                (label == 0) == (author == HUMAN_AUTHOR),
                row_no,
                f"label {label} inconsistent with author {author!r} "
                f"(label 0 is reserved for author 'human')",
            )
            rows.append(DocumentMeta(id=doc_id, genre=genre, author=author, label=label))
    return rows
