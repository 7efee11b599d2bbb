"""Comma-usage metrics.

Five metrics describing how commas are used in a document. Morpheme counts
exclude symbol-category tokens (the comma itself, periods, other punctuation)
in every denominator and segment: punctuation marks are not morphemes.

Aggregation to document level follows three different conventions, stated per
function: inclusion and POS-pair diversity are text-level, usage and segment
length average over all sentences, relative position averages only over
sentences that contain a comma.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Sentence, TaggedDocument
from .tagmap import (
    CanonicalCategory,
    CanonicalTagMap,
    categorize,
    is_symbol_category,
)


@dataclass(frozen=True)
class CommaFeatures:
    inclusion_rate: float
    usage_rate: float
    avg_relative_position: float
    avg_segment_length: float
    pos_pair_diversity: float


def _is_comma(tagmap: CanonicalTagMap, token) -> bool:
    return categorize(tagmap, token) is CanonicalCategory.COMMA


def _has_comma(sentence: Sentence, tagmap: CanonicalTagMap) -> bool:
    return any(_is_comma(tagmap, t) for t in sentence.tokens)


def _morpheme_count(sentence: Sentence, tagmap: CanonicalTagMap) -> int:
    return sum(1 for t in sentence.tokens if not is_symbol_category(categorize(tagmap, t)))


def comma_inclusion_rate(doc: TaggedDocument, tagmap: CanonicalTagMap) -> float:
    """Proportion of sentences containing at least one comma."""
    with_comma = sum(1 for s in doc.sentences if _has_comma(s, tagmap))
    return with_comma / len(doc.sentences)


def comma_usage_rate(sentence: Sentence, tagmap: CanonicalTagMap) -> float:
    """Commas per morpheme in one sentence; 0.0 for a morpheme-free sentence."""
    commas = sum(1 for t in sentence.tokens if _is_comma(tagmap, t))
    morphemes = _morpheme_count(sentence, tagmap)
    return commas / morphemes if morphemes else 0.0


def comma_relative_positions(sentence: Sentence, tagmap: CanonicalTagMap) -> float:
    """Mean relative position of the sentence's commas.

    Each comma scores (morphemes strictly before it) / (morphemes in the
    sentence); a morpheme-free sentence scores 0.0 per comma. Undefined for
    comma-free sentences: callers must skip those.
    """
    morphemes = _morpheme_count(sentence, tagmap)
    positions: list[float] = []
    before = 0
    for token in sentence.tokens:
        category = categorize(tagmap, token)
        if category is CanonicalCategory.COMMA:
            positions.append(before / morphemes if morphemes else 0.0)
        elif not is_symbol_category(category):
            before += 1
    if not positions:
        raise ValueError("comma_relative_positions requires a sentence with a comma")
    return sum(positions) / len(positions)


def comma_segment_lengths(sentence: Sentence, tagmap: CanonicalTagMap) -> float:
    """Mean morpheme count of the comma-delimited segments of one sentence.

    Empty segments (adjacent, leading or trailing commas) are dropped; a
    comma-free sentence is a single segment spanning all its morphemes.
    """
    segments: list[int] = []
    current = 0
    saw_comma = False
    for token in sentence.tokens:
        category = categorize(tagmap, token)
        if category is CanonicalCategory.COMMA:
            saw_comma = True
            segments.append(current)
            current = 0
        elif not is_symbol_category(category):
            current += 1
    segments.append(current)
    if not saw_comma:
        return float(segments[0])
    kept = [s for s in segments if s > 0]
    return sum(kept) / len(kept) if kept else 0.0


def comma_pos_pair_diversity(doc: TaggedDocument, tagmap: CanonicalTagMap) -> float:
    """Diversity of raw-tag pairs flanking commas, pooled over the document.

    For every comma with both a preceding and a following token in its
    sentence, the pair is the two neighbors' raw tags; returns unique/total,
    0.0 when no such pair exists.
    """
    total = 0
    unique: set[tuple[str, str]] = set()
    for sent in doc.sentences:
        for i in range(1, len(sent.tokens) - 1):
            if _is_comma(tagmap, sent.tokens[i]):
                unique.add((sent.tokens[i - 1].tag, sent.tokens[i + 1].tag))
                total += 1
    return len(unique) / total if total else 0.0


def comma_feature_vector(doc: TaggedDocument, tagmap: CanonicalTagMap) -> CommaFeatures:
    usage = [comma_usage_rate(s, tagmap) for s in doc.sentences]
    seg_lengths = [comma_segment_lengths(s, tagmap) for s in doc.sentences]
    rel_positions = [
        comma_relative_positions(s, tagmap)
        for s in doc.sentences
        if _has_comma(s, tagmap)
    ]
    return CommaFeatures(
        inclusion_rate=comma_inclusion_rate(doc, tagmap),
        usage_rate=sum(usage) / len(usage),
        avg_relative_position=(
            sum(rel_positions) / len(rel_positions) if rel_positions else 0.0
        ),
        avg_segment_length=sum(seg_lengths) / len(seg_lengths),
        pos_pair_diversity=comma_pos_pair_diversity(doc, tagmap),
    )
