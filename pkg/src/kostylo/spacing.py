"""Word-spacing features.

Korean orthography requires a space before bound nouns and (more flexibly)
before auxiliary predicates; writers deviate from the norm at characteristic
rates. The three classifier features below are text-level ratios: counts are
pooled over all sentences of the document, then divided once. A zero
denominator yields 0.0 so feature vectors stay dense; 0.0 therefore means
"no evidence", not "never spaced".

Eojeol- and VX-diversity diagnostics live here too; they are not part of the
spacing classifier feature set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Sentence, TaggedDocument, space_before
from .tagmap import CanonicalCategory, CanonicalTagMap, categorize, is_excluded_pair


@dataclass(frozen=True)
class SpacingFeatures:
    mmn_bn_space_ratio: float
    bn_space_ratio: float
    vx_space_ratio: float


def _ratio(spaced: int, total: int) -> float:
    return spaced / total if total else 0.0


def mmn_bn_space_ratio(doc: TaggedDocument, tagmap: CanonicalTagMap) -> float:
    """Share of adjacent numeral-determiner -> bound-noun pairs written with a space."""
    total = 0
    with_space = 0
    for sent in doc.sentences:
        for i in range(1, len(sent.tokens)):
            if (
                categorize(tagmap, sent.tokens[i - 1]) is CanonicalCategory.MMN
                and categorize(tagmap, sent.tokens[i]) is CanonicalCategory.BN
            ):
                total += 1
                if space_before(sent, i):
                    with_space += 1
    return _ratio(with_space, total)


def bn_space_ratio(doc: TaggedDocument, tagmap: CanonicalTagMap) -> float:
    """Share of non-initial bound nouns preceded by a space.

    Surfaces listed in the tag map's bn_trivial_surfaces are skipped entirely.
    """
    total = 0
    with_space = 0
    for sent in doc.sentences:
        for i in range(1, len(sent.tokens)):
            tok = sent.tokens[i]
            if categorize(tagmap, tok) is not CanonicalCategory.BN:
                continue
            if tok.surface in tagmap.bn_trivial_surfaces:
                continue
            total += 1
            if space_before(sent, i):
                with_space += 1
    return _ratio(with_space, total)


def vx_space_ratio(doc: TaggedDocument, tagmap: CanonicalTagMap) -> float:
    """Share of non-initial auxiliary predicates preceded by a space.

    Pairs matching an exclusion rule (spacing orthographically forbidden, e.g.
    -아/-어 ending + 지) are skipped entirely.
    """
    total = 0
    with_space = 0
    for sent in doc.sentences:
        for i in range(1, len(sent.tokens)):
            if categorize(tagmap, sent.tokens[i]) is not CanonicalCategory.VX:
                continue
            if is_excluded_pair(tagmap, sent.tokens[i - 1], sent.tokens[i]):
                continue
            total += 1
            if space_before(sent, i):
                with_space += 1
    return _ratio(with_space, total)


def spacing_feature_vector(doc: TaggedDocument, tagmap: CanonicalTagMap) -> SpacingFeatures:
    return SpacingFeatures(
        mmn_bn_space_ratio=mmn_bn_space_ratio(doc, tagmap),
        bn_space_ratio=bn_space_ratio(doc, tagmap),
        vx_space_ratio=vx_space_ratio(doc, tagmap),
    )


def _eojeol_signatures(sentence: Sentence) -> list[tuple[str, ...]]:
    return [tuple(t.tag for t in group) for group in sentence.eojeols()]


def eojeol_pos_diversity(doc: TaggedDocument) -> float:
    """Unique eojeol tag signatures divided by total eojeols in the document.

    A signature is the ordered raw-tag sequence of one eojeol's morphemes.
    """
    signatures: list[tuple[str, ...]] = []
    for sent in doc.sentences:
        signatures.extend(_eojeol_signatures(sent))
    return len(set(signatures)) / len(signatures)


def unspaced_vx_diversity(doc: TaggedDocument, tagmap: CanonicalTagMap) -> float:
    """Unique surfaces among unspaced, non-excluded auxiliary predicates."""
    surfaces: list[str] = []
    for sent in doc.sentences:
        for i in range(1, len(sent.tokens)):
            if categorize(tagmap, sent.tokens[i]) is not CanonicalCategory.VX:
                continue
            if space_before(sent, i):
                continue
            if is_excluded_pair(tagmap, sent.tokens[i - 1], sent.tokens[i]):
                continue
            surfaces.append(sent.tokens[i].surface)
    return len(set(surfaces)) / len(surfaces) if surfaces else 0.0
