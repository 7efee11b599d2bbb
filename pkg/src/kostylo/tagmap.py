"""Normalization of raw tagger tags into the canonical categories features need.

A tag map is plain data (JSON), so any tagger's tagset can be supported without
code changes. Two presets ship under kostylo/tagmaps: "sejong" for
Sejong-style tagsets (Kiwi, Mecab-ko and relatives) and "kkma" for the Kkma
tagset. Lookups of undeclared tags fall back to OTHER.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources

from .corpus import MorphemeToken


class CanonicalCategory(str, Enum):
    BN = "BN"                    # bound noun
    MMN = "MMN"                  # numeral determiner
    VX = "VX"                    # auxiliary predicate
    ENDING = "ENDING"
    COMMA = "COMMA"
    NOMINAL = "NOMINAL"
    PREDICATE = "PREDICATE"
    MODIFIER = "MODIFIER"
    INTERJECTION = "INTERJECTION"
    RELATION = "RELATION"
    AFFIX = "AFFIX"
    SYMBOL = "SYMBOL"
    FOREIGN = "FOREIGN"
    OTHER = "OTHER"


# Punctuation-like categories; tokens in these never count as morphemes.
SYMBOL_CATEGORIES = frozenset({CanonicalCategory.COMMA, CanonicalCategory.SYMBOL})


def is_symbol_category(category: CanonicalCategory) -> bool:
    return category in SYMBOL_CATEGORIES


class TagMapError(ValueError):
    """Malformed tag-map file or unknown preset."""


@dataclass(frozen=True)
class ExclusionRule:
    """Adjacent-pair pattern whose spacing is orthographically forced.

    Matches when the previous token has prev_category and a surface ending in
    one of prev_surface_suffixes, and the current token has curr_category and a
    surface in curr_surfaces.
    """

    rule_id: str
    prev_category: CanonicalCategory
    prev_surface_suffixes: frozenset[str]
    curr_category: CanonicalCategory
    curr_surfaces: frozenset[str]

    def __post_init__(self):
        if not (self.prev_surface_suffixes and self.curr_surfaces):
            raise TagMapError(f"exclusion rule {self.rule_id!r}: surface sets must be non-empty")


@dataclass(frozen=True)
class CanonicalTagMap:
    tagger_name: str
    mapping: dict[str, CanonicalCategory]
    exclusion_rules: tuple[ExclusionRule, ...] = ()
    bn_trivial_surfaces: frozenset[str] = field(default_factory=frozenset)

    def category(self, tag: str) -> CanonicalCategory:
        return self.mapping.get(tag, CanonicalCategory.OTHER)


def categorize(tagmap: CanonicalTagMap, token: MorphemeToken) -> CanonicalCategory:
    return tagmap.category(token.tag)


def is_excluded_pair(tagmap: CanonicalTagMap, prev: MorphemeToken, curr: MorphemeToken) -> bool:
    """True iff some exclusion rule matches the adjacent (prev, curr) pair."""
    prev_cat = categorize(tagmap, prev)
    curr_cat = categorize(tagmap, curr)
    for rule in tagmap.exclusion_rules:
        if prev_cat != rule.prev_category or curr_cat != rule.curr_category:
            continue
        if curr.surface not in rule.curr_surfaces:
            continue
        if any(prev.surface.endswith(suffix) for suffix in rule.prev_surface_suffixes):
            return True
    return False


def _category(name: object, where: str) -> CanonicalCategory:
    try:
        return CanonicalCategory(name)
    except (ValueError, TypeError):
        raise TagMapError(f"{where}: unknown canonical category {name!r}") from None


def tagmap_from_dict(data: dict) -> CanonicalTagMap:
    if not isinstance(data, dict):
        raise TagMapError("tag map must be a JSON object")
    tagger_name = data.get("tagger_name")
    if not isinstance(tagger_name, str) or not tagger_name:
        raise TagMapError("tag map field 'tagger_name' must be a non-empty string")
    raw_mapping = data.get("mapping")
    if not isinstance(raw_mapping, dict):
        raise TagMapError("tag map field 'mapping' must be an object")
    mapping = {
        tag: _category(cat, f"mapping[{tag!r}]") for tag, cat in raw_mapping.items()
    }
    rules = []
    for i, raw in enumerate(data.get("exclusion_rules", [])):
        if not isinstance(raw, dict):
            raise TagMapError(f"exclusion_rules[{i}] must be an object")
        rules.append(
            ExclusionRule(
                rule_id=str(raw.get("rule_id", f"rule-{i}")),
                prev_category=_category(raw.get("prev_category"), f"exclusion_rules[{i}]"),
                prev_surface_suffixes=frozenset(raw.get("prev_surface_suffixes", [])),
                curr_category=_category(raw.get("curr_category"), f"exclusion_rules[{i}]"),
                curr_surfaces=frozenset(raw.get("curr_surfaces", [])),
            )
        )
    return CanonicalTagMap(
        tagger_name=tagger_name,
        mapping=mapping,
        exclusion_rules=tuple(rules),
        bn_trivial_surfaces=frozenset(data.get("bn_trivial_surfaces", [])),
    )


def tagmap_to_dict(tagmap: CanonicalTagMap) -> dict:
    return {
        "tagger_name": tagmap.tagger_name,
        "mapping": {tag: cat.value for tag, cat in tagmap.mapping.items()},
        "exclusion_rules": [
            {
                "rule_id": r.rule_id,
                "prev_category": r.prev_category.value,
                "prev_surface_suffixes": sorted(r.prev_surface_suffixes),
                "curr_category": r.curr_category.value,
                "curr_surfaces": sorted(r.curr_surfaces),
            }
            for r in tagmap.exclusion_rules
        ],
        "bn_trivial_surfaces": sorted(tagmap.bn_trivial_surfaces),
    }


def load_tagmap(path) -> CanonicalTagMap:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise TagMapError(f"{path}: malformed JSON ({exc.msg})") from None
    return tagmap_from_dict(data)


def preset_names() -> list[str]:
    files = resources.files("kostylo").joinpath("tagmaps")
    return sorted(p.name[: -len(".json")] for p in files.iterdir() if p.name.endswith(".json"))


def load_preset(name: str) -> CanonicalTagMap:
    """Load one of the tag maps shipped with the package."""
    resource = resources.files("kostylo").joinpath(f"tagmaps/{name}.json")
    try:
        data = json.loads(resource.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise TagMapError(
            f"unknown tag map preset {name!r}; available: {', '.join(preset_names())}"
        ) from None
    return tagmap_from_dict(data)
