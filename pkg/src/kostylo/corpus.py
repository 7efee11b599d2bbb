"""Tagged-corpus data model and the JSONL interchange format.

One document per line, UTF-8:

    {"id": "...", "genre": "essay|poetry|paper_abstract", "author": "...",
     "label": 0|1,
     "sentences": [[{"surface": "...", "tag": "...", "eojeol": 0}, ...], ...]}

Documents, sentences and tokens are immutable after load, so a corpus can be
shared freely across threads.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field

GENRES = ("essay", "poetry", "paper_abstract")

DOCUMENT_FIELDS = ("id", "genre", "author", "label", "sentences")
TOKEN_FIELDS = ("surface", "tag", "eojeol")

HUMAN_AUTHOR = "human"


class CorpusError(ValueError):
    """Any failure while loading or validating a corpus."""


class CorpusFormatError(CorpusError):
    """Line is not well-formed JSON or lacks the required structure."""


class CorpusValidationError(CorpusError):
    """A structurally valid record violates a corpus invariant."""


class EmptyCorpusError(CorpusError):
    """The file contains no document records."""


class UnknownFieldWarning(UserWarning):
    """Extra fields in a record are ignored, not rejected."""


@dataclass(frozen=True)
class MorphemeToken:
    surface: str
    tag: str
    eojeol_index: int


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[MorphemeToken, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def eojeols(self) -> list[tuple[MorphemeToken, ...]]:
        """Tokens grouped by eojeol, in order."""
        groups: list[list[MorphemeToken]] = []
        current = -1
        for tok in self.tokens:
            if tok.eojeol_index != current:
                groups.append([])
                current = tok.eojeol_index
            groups[-1].append(tok)
        return [tuple(g) for g in groups]


@dataclass(frozen=True)
class TaggedDocument:
    id: str
    genre: str
    author: str
    label: int
    sentences: tuple[Sentence, ...]


@dataclass(frozen=True)
class Corpus:
    documents: tuple[TaggedDocument, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)

    def authors(self) -> list[str]:
        seen: dict[str, None] = {}
        for doc in self.documents:
            seen.setdefault(doc.author, None)
        return list(seen)

    def genres(self) -> list[str]:
        seen: dict[str, None] = {}
        for doc in self.documents:
            seen.setdefault(doc.genre, None)
        return list(seen)

    def filter(self, genre: str | None = None, author: str | None = None) -> "Corpus":
        docs = tuple(
            d
            for d in self.documents
            if (genre is None or d.genre == genre)
            and (author is None or d.author == author)
        )
        return Corpus(docs)


def space_before(sentence: Sentence, index: int) -> bool:
    """True iff token `index` begins a new eojeol, i.e. a space precedes it.

    Undefined for the sentence-initial token.
    """
    if index <= 0 or index >= len(sentence.tokens):
        raise ValueError(
            f"space_before requires 0 < index < {len(sentence.tokens)}, got {index}"
        )
    return sentence.tokens[index].eojeol_index > sentence.tokens[index - 1].eojeol_index


def _require(condition: bool, doc_id: str, message: str) -> None:
    if not condition:
        raise CorpusValidationError(f"document {doc_id!r}: {message}")


def _parse_token(raw: object, doc_id: str, where: str) -> MorphemeToken:
    if not isinstance(raw, dict):
        raise CorpusFormatError(f"document {doc_id!r}: token at {where} is not an object")
    extra = set(raw) - set(TOKEN_FIELDS)
    if extra:
        warnings.warn(
            f"document {doc_id!r}: ignoring unknown token fields {sorted(extra)}",
            UnknownFieldWarning,
            stacklevel=2,
        )
    try:
        surface = raw["surface"]
        tag = raw["tag"]
        eojeol = raw["eojeol"]
    except KeyError as exc:
        raise CorpusFormatError(
            f"document {doc_id!r}: token at {where} missing field {exc.args[0]!r}"
        ) from None
    _require(isinstance(surface, str) and surface != "", doc_id, f"token at {where}: surface must be a non-empty string")
    _require(isinstance(tag, str) and tag != "", doc_id, f"token at {where}: tag must be a non-empty string")
    _require(isinstance(eojeol, int) and not isinstance(eojeol, bool) and eojeol >= 0,
             doc_id, f"token at {where}: eojeol must be a non-negative integer")
    return MorphemeToken(surface=surface, tag=tag, eojeol_index=eojeol)


def _parse_sentence(raw: object, doc_id: str, s_index: int) -> Sentence:
    if not isinstance(raw, list):
        raise CorpusFormatError(f"document {doc_id!r}: sentence {s_index} is not an array")
    _require(len(raw) > 0, doc_id, f"sentence {s_index} is empty")
    tokens = tuple(
        _parse_token(t, doc_id, f"sentence {s_index}, token {i}") for i, t in enumerate(raw)
    )
    _require(tokens[0].eojeol_index == 0, doc_id, f"sentence {s_index}: eojeol indices must start at 0")
    for i in range(1, len(tokens)):
        step = tokens[i].eojeol_index - tokens[i - 1].eojeol_index
        _require(step in (0, 1), doc_id,
                 f"sentence {s_index}, token {i}: eojeol index must repeat or increase by 1")
    return Sentence(tokens=tokens)


def parse_document(record: object) -> TaggedDocument:
    """Validate one decoded JSON record into a TaggedDocument."""
    if not isinstance(record, dict):
        raise CorpusFormatError("document record is not a JSON object")
    doc_id = record.get("id")
    if not isinstance(doc_id, str) or doc_id == "":
        raise CorpusFormatError("document field 'id' must be a non-empty string")
    extra = set(record) - set(DOCUMENT_FIELDS)
    if extra:
        warnings.warn(
            f"document {doc_id!r}: ignoring unknown fields {sorted(extra)}",
            UnknownFieldWarning,
            stacklevel=2,
        )
    for name in DOCUMENT_FIELDS:
        if name not in record:
            raise CorpusFormatError(f"document {doc_id!r}: missing field {name!r}")
    genre = record["genre"]
    author = record["author"]
    label = record["label"]
    _require(genre in GENRES, doc_id, f"genre must be one of {GENRES}, got {genre!r}")
    _require(isinstance(author, str) and author != "", doc_id, "author must be a non-empty string")
    _require(label in (0, 1) and not isinstance(label, bool), doc_id, "label must be 0 or 1")
    _require((label == 0) == (author == HUMAN_AUTHOR), doc_id,
             f"label {label} inconsistent with author {author!r} "
             f"(label 0 is reserved for author 'human')")
    raw_sentences = record["sentences"]
    if not isinstance(raw_sentences, list):
        raise CorpusFormatError(f"document {doc_id!r}: 'sentences' must be an array")
    _require(len(raw_sentences) > 0, doc_id, "document has no sentences")
    sentences = tuple(_parse_sentence(s, doc_id, i) for i, s in enumerate(raw_sentences))
    return TaggedDocument(id=doc_id, genre=genre, author=author, label=label, sentences=sentences)


def load_corpus(path) -> Corpus:
    """Load and validate a JSONL corpus file.

    Blank lines are tolerated; anything else must be a valid document record.
    """
    documents: list[TaggedDocument] = []
    seen_ids: dict[str, int] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(f"line {line_no}: malformed JSON ({exc.msg})") from None
            doc = parse_document(record)
            if doc.id in seen_ids:
                raise CorpusValidationError(
                    f"line {line_no}: duplicate document id {doc.id!r} "
                    f"(first seen on line {seen_ids[doc.id]})"
                )
            seen_ids[doc.id] = line_no
            documents.append(doc)
    if not documents:
        raise EmptyCorpusError(f"{path}: corpus file contains no documents")
    return Corpus(documents=tuple(documents))


def document_to_record(doc: TaggedDocument) -> dict:
    return {
        "id": doc.id,
        "genre": doc.genre,
        "author": doc.author,
        "label": doc.label,
        "sentences": [
            [
                {"surface": t.surface, "tag": t.tag, "eojeol": t.eojeol_index}
                for t in sent.tokens
            ]
            for sent in doc.sentences
        ],
    }


def write_corpus(corpus: Corpus, path) -> None:
    """Write a corpus in the interchange format, one document per line."""
    with open(path, "w", encoding="utf-8") as fh:
        for doc in corpus.documents:
            fh.write(json.dumps(document_to_record(doc), ensure_ascii=False))
            fh.write("\n")
