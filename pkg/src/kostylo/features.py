"""Feature-set registry: names, order and extraction for the three sets.

The order of names here fixes the column order of every CSV and the weight
order of every model file, so treat it as part of the file formats.
"""

from __future__ import annotations

from .commas import comma_feature_vector
from .corpus import Corpus, TaggedDocument
from .posngrams import NGRAM_ORDERS, pos_ngram_feature_vector
from .spacing import spacing_feature_vector
from .tagmap import CanonicalTagMap

FEATURE_SETS: dict[str, tuple[str, ...]] = {
    "spacing": (
        "mmn_bn_space_ratio",
        "bn_space_ratio",
        "vx_space_ratio",
    ),
    "pos_ngram": tuple(f"pos_ngram_diversity_{n}" for n in NGRAM_ORDERS),
    "punctuation": (
        "comma_inclusion_rate",
        "comma_usage_rate",
        "comma_avg_relative_position",
        "comma_avg_segment_length",
        "comma_pos_pair_diversity",
    ),
}

FEATURE_SET_DIMS = {name: len(cols) for name, cols in FEATURE_SETS.items()}

# Pseudo-set accepted by the CLI: the three sets concatenated.
ALL_SETS = ("spacing", "pos_ngram", "punctuation")


class UnknownFeatureSetError(ValueError):
    pass


def check_feature_set(name: str, allow_all: bool = False) -> str:
    valid = FEATURE_SETS.keys() | ({"all"} if allow_all else set())
    if name not in valid:
        raise UnknownFeatureSetError(
            f"unknown feature set {name!r}; expected one of {sorted(valid)}"
        )
    return name


def extract_features(
    doc: TaggedDocument, tagmap: CanonicalTagMap, feature_set: str
) -> list[float]:
    """Feature values for one document, in registry order."""
    if feature_set == "spacing":
        v = spacing_feature_vector(doc, tagmap)
        return [v.mmn_bn_space_ratio, v.bn_space_ratio, v.vx_space_ratio]
    if feature_set == "pos_ngram":
        v = pos_ngram_feature_vector(doc)
        return [v.diversity[n] for n in NGRAM_ORDERS]
    if feature_set == "punctuation":
        v = comma_feature_vector(doc, tagmap)
        return [
            v.inclusion_rate,
            v.usage_rate,
            v.avg_relative_position,
            v.avg_segment_length,
            v.pos_pair_diversity,
        ]
    raise UnknownFeatureSetError(f"unknown feature set {feature_set!r}")


def feature_matrix(
    corpus: Corpus, tagmap: CanonicalTagMap, feature_set: str
) -> list[list[float]]:
    """Row per document, in corpus order."""
    check_feature_set(feature_set)
    return [extract_features(doc, tagmap, feature_set) for doc in corpus]
