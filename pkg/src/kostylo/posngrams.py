"""POS n-gram diversity: unique tag windows over total tag windows.

Windows are contiguous runs of RAW tag strings inside one sentence; counts are
pooled over all sentences before the single division. Raw tags are used on
purpose: collapsing them to canonical categories would deflate diversity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import TaggedDocument

NGRAM_ORDERS = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class PosNgramFeatures:
    diversity: dict[int, float]


def pos_ngram_diversity(doc: TaggedDocument, n: int) -> float:
    """Diversity of order-n tag windows; 0.0 when no sentence reaches n tokens."""
    if n not in NGRAM_ORDERS:
        raise ValueError(f"n must be in {NGRAM_ORDERS}, got {n}")
    total = 0
    unique: set[tuple[str, ...]] = set()
    for sent in doc.sentences:
        tags = tuple(t.tag for t in sent.tokens)
        for i in range(len(tags) - n + 1):
            unique.add(tags[i : i + n])
            total += 1
    return len(unique) / total if total else 0.0


def pos_ngram_feature_vector(doc: TaggedDocument) -> PosNgramFeatures:
    return PosNgramFeatures(
        diversity={n: pos_ngram_diversity(doc, n) for n in NGRAM_ORDERS}
    )
