"""Descriptive corpus statistics: comma contexts, POS distribution, Zipf/Heaps.

These back the `analyze` CLI command. All outputs use deterministic ordering
(lexicographic tie-breaks) so reports are byte-identical across runs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .corpus import Corpus
from .tagmap import CanonicalCategory, CanonicalTagMap

# Feature-only categories folded into the word-type classes they belong to
# when reporting the overall POS distribution.
WORD_TYPE_FOLD = {
    CanonicalCategory.BN: CanonicalCategory.NOMINAL,
    CanonicalCategory.MMN: CanonicalCategory.MODIFIER,
    CanonicalCategory.VX: CanonicalCategory.PREDICATE,
    CanonicalCategory.COMMA: CanonicalCategory.SYMBOL,
}


class EmptyDistributionError(ValueError):
    """Requested a distribution over an empty event set."""


@dataclass(frozen=True)
class RankFrequencyCurve:
    """Word frequencies by descending rank; words aligned with points."""

    points: tuple[tuple[int, int], ...]
    words: tuple[str, ...]


@dataclass(frozen=True)
class VocabGrowthCurve:
    points: tuple[tuple[int, int], ...]


def pos_before_comma_ratios(corpus: Corpus, tagmap: CanonicalTagMap) -> dict[str, float]:
    """Per raw tag: share of its occurrences immediately followed by a comma."""
    totals: Counter[str] = Counter()
    before_comma: Counter[str] = Counter()
    for doc in corpus:
        for sent in doc.sentences:
            tokens = sent.tokens
            for i, tok in enumerate(tokens):
                totals[tok.tag] += 1
                if (
                    i + 1 < len(tokens)
                    and tagmap.category(tokens[i + 1].tag) is CanonicalCategory.COMMA
                ):
                    before_comma[tok.tag] += 1
    return {tag: before_comma[tag] / n for tag, n in totals.items()}


def comma_pos_pair_distribution(
    corpus: Corpus, tagmap: CanonicalTagMap
) -> dict[tuple[str, str], float]:
    """Normalized counts of (tag before, tag after) pairs around commas."""
    counts: Counter[tuple[str, str]] = Counter()
    for doc in corpus:
        for sent in doc.sentences:
            tokens = sent.tokens
            for i in range(1, len(tokens) - 1):
                if tagmap.category(tokens[i].tag) is CanonicalCategory.COMMA:
                    counts[(tokens[i - 1].tag, tokens[i + 1].tag)] += 1
    total = sum(counts.values())
    if total == 0:
        raise EmptyDistributionError("corpus contains no comma with two neighbors")
    return {pair: n / total for pair, n in counts.items()}


def pos_distribution(corpus: Corpus, tagmap: CanonicalTagMap) -> dict[CanonicalCategory, float]:
    """Token share per word-type category; shares sum to 1."""
    counts: Counter[CanonicalCategory] = Counter()
    total = 0
    for doc in corpus:
        for sent in doc.sentences:
            for tok in sent.tokens:
                category = tagmap.category(tok.tag)
                counts[WORD_TYPE_FOLD.get(category, category)] += 1
                total += 1
    if total == 0:
        raise EmptyDistributionError("corpus contains no tokens")
    return {category: n / total for category, n in counts.items()}


def _eojeol_word_stream(corpus: Corpus) -> list[str]:
    """Eojeol surfaces (token surfaces concatenated) in corpus order."""
    words: list[str] = []
    for doc in corpus:
        for sent in doc.sentences:
            for group in sent.eojeols():
                words.append("".join(t.surface for t in group))
    return words


def zipf_curve(corpus: Corpus) -> RankFrequencyCurve:
    """Rank/frequency table of eojeol words, ties broken lexicographically."""
    freqs = Counter(_eojeol_word_stream(corpus))
    if not freqs:
        raise EmptyDistributionError("corpus contains no tokens")
    ordered = sorted(freqs.items(), key=lambda kv: (-kv[1], kv[0]))
    return RankFrequencyCurve(
        points=tuple((rank, f) for rank, (_, f) in enumerate(ordered, start=1)),
        words=tuple(w for w, _ in ordered),
    )


def heaps_curve(corpus: Corpus) -> VocabGrowthCurve:
    """Vocabulary size after each successive eojeol word."""
    words = _eojeol_word_stream(corpus)
    if not words:
        raise EmptyDistributionError("corpus contains no tokens")
    seen: set[str] = set()
    points: list[tuple[int, int]] = []
    for i, w in enumerate(words, start=1):
        seen.add(w)
        points.append((i, len(seen)))
    return VocabGrowthCurve(points=tuple(points))
