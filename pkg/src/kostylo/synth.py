"""Deterministic synthetic tagged-corpus generator.

Produces documents whose comma, spacing and tag-diversity statistics follow a
StyleProfile, without any Korean linguistic realism: the point is controlled
statistics for tests, demos and calibration runs. All randomness comes from
the counter-based splitmix64 stream in kostylo.rng, so a profile generates a
byte-identical corpus on every run and in any faithful reimplementation; the
profile's rng_algorithm field records the generator identity.

Tags are synthetic: fillers T0..T{k-1} (k = tag_vocab_size) plus the marker
tags BN, MMN, VX, ENDING, COMMA and SYM that the spacing/comma features need.
Use synthetic_tagmap() to featurize generated corpora.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, replace

from .corpus import Corpus, HUMAN_AUTHOR, MorphemeToken, Sentence, TaggedDocument
from .rng import ALGORITHM_ID, Stream, draw
from .tagmap import CanonicalTagMap, tagmap_from_dict


class SynthError(ValueError):
    pass


BN_SURFACES = ("것", "수", "때", "데")
MMN_SURFACES = ("한", "두", "세")
VX_SURFACES = ("지", "있", "보", "버리")
ENDING_A_EO_SURFACES = ("먹어", "잡아", "들어")
PERIOD_TAG = "SYM"
COMMA_TAG = "COMMA"


@dataclass(frozen=True)
class StyleProfile:
    """Knobs for one class of synthetic documents.

    comma_sentence_prob   chance a sentence contains commas at all
    comma_per_morpheme    target corpus-level commas per morpheme
    relative_position_bias  mean relative position of commas within a sentence
    bn_space_prob         chance of a space before a (non-trivial) bound noun
    vx_space_prob         chance of a space before a non-excluded auxiliary
    tag_vocab_size        number of filler tags T0..T{k-1}
    sentence_length_range inclusive (min, max) morphemes per sentence
    seed                  stream seed; everything else equal, the seed alone
                          selects a different corpus with the same statistics
    author / genre        document metadata (author "human" forces label 0)
    sentences_per_doc     sentences in every document
    comma_context_tag_count  if > 0, tags adjacent to commas are drawn from
                          a dedicated pool T0..T{count-1}, which may be
                          narrower or wider than the filler vocabulary;
                          0 leaves comma contexts to the filler draw
    """

    comma_sentence_prob: float
    comma_per_morpheme: float
    relative_position_bias: float
    bn_space_prob: float
    vx_space_prob: float
    tag_vocab_size: int
    sentence_length_range: tuple[int, int]
    seed: int
    author: str = "synthetic"
    genre: str = "essay"
    sentences_per_doc: int = 8
    comma_context_tag_count: int = 0
    rng_algorithm: str = ALGORITHM_ID

    def __post_init__(self):
        for name in (
            "comma_sentence_prob",
            "comma_per_morpheme",
            "relative_position_bias",
            "bn_space_prob",
            "vx_space_prob",
        ):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise SynthError(f"{name} must be in [0, 1], got {value}")
        if self.tag_vocab_size < 1:
            raise SynthError("tag_vocab_size must be positive")
        lo, hi = self.sentence_length_range
        if not (0 < lo <= hi):
            raise SynthError("sentence_length_range must satisfy 0 < min <= max")
        if self.sentences_per_doc < 1:
            raise SynthError("sentences_per_doc must be positive")
        if self.comma_context_tag_count < 0:
            raise SynthError("comma_context_tag_count must be non-negative")
        if self.rng_algorithm != ALGORITHM_ID:
            raise SynthError(
                f"unsupported rng_algorithm {self.rng_algorithm!r}; "
                f"this build implements {ALGORITHM_ID!r}"
            )


PROFILE_FIELDS = (
    "comma_sentence_prob",
    "comma_per_morpheme",
    "relative_position_bias",
    "bn_space_prob",
    "vx_space_prob",
    "tag_vocab_size",
    "sentence_length_range",
    "seed",
    "author",
    "genre",
    "sentences_per_doc",
    "comma_context_tag_count",
    "rng_algorithm",
)


def profile_from_dict(data: dict) -> StyleProfile:
    if not isinstance(data, dict):
        raise SynthError("profile must be a JSON object")
    extra = set(data) - set(PROFILE_FIELDS)
    if extra:
        warnings.warn(f"ignoring unknown profile fields {sorted(extra)}", UserWarning)
    kwargs = {k: data[k] for k in PROFILE_FIELDS if k in data}
    if "sentence_length_range" in kwargs:
        kwargs["sentence_length_range"] = tuple(kwargs["sentence_length_range"])
    try:
        return StyleProfile(**kwargs)
    except TypeError as exc:
        raise SynthError(f"profile is missing required fields: {exc}") from None


def profile_to_dict(profile: StyleProfile) -> dict:
    data = {name: getattr(profile, name) for name in PROFILE_FIELDS}
    data["sentence_length_range"] = list(profile.sentence_length_range)
    return data


def load_profile(path) -> StyleProfile:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SynthError(f"{path}: malformed JSON ({exc.msg})") from None
    return profile_from_dict(data)


def synthetic_tagmap() -> CanonicalTagMap:
    """Tag map for generated corpora: marker tags map to their categories."""
    return tagmap_from_dict(
        {
            "tagger_name": "synthetic",
            "mapping": {
                "BN": "BN",
                "MMN": "MMN",
                "VX": "VX",
                "ENDING": "ENDING",
                "COMMA": "COMMA",
                "SYM": "SYMBOL",
            },
            "exclusion_rules": [
                {
                    "rule_id": "ending-a-eo-plus-ji",
                    "prev_category": "ENDING",
                    "prev_surface_suffixes": ["아", "어"],
                    "curr_category": "VX",
                    "curr_surfaces": ["지"],
                }
            ],
            "bn_trivial_surfaces": [],
        }
    )


def _clamp(value, lo, hi):
    return max(lo, min(hi, value))


class _SentenceBuilder:
    """Accumulates tokens while tracking eojeol indices."""

    def __init__(self):
        self.tokens: list[MorphemeToken] = []
        self._eojeol = 0

    def add(self, surface: str, tag: str, new_eojeol: bool) -> None:
        if self.tokens and new_eojeol:
            self._eojeol += 1
        self.tokens.append(MorphemeToken(surface=surface, tag=tag, eojeol_index=self._eojeol))

    def build(self) -> Sentence:
        return Sentence(tokens=tuple(self.tokens))


def _generate_sentence(profile: StyleProfile, rng: Stream) -> Sentence:
    lo, hi = profile.sentence_length_range
    length = rng.randint(lo, hi)
    k = profile.tag_vocab_size
    surface_pool = 4 * k

    surfaces = [f"w{rng.below(surface_pool)}" for _ in range(length)]
    tags = [f"T{rng.below(k)}" for _ in range(length)]
    # Slots taken over by spacing constructs keep their surface/tag fixed.
    fixed: set[int] = set()
    # Forced eojeol-boundary decision before a slot, overriding the default.
    forced_space: dict[int, bool] = {}

    def claim(start: int, n: int) -> bool:
        span = range(start, start + n)
        if any(s in fixed for s in span):
            return False
        fixed.update(span)
        return True

    # Numeral determiner + bound noun pair.
    if length >= 2 and rng.chance(0.6):
        j = rng.below(length - 1)
        if claim(j, 2):
            surfaces[j], tags[j] = rng.choice(MMN_SURFACES), "MMN"
            surfaces[j + 1], tags[j + 1] = rng.choice(BN_SURFACES), "BN"
            forced_space[j + 1] = rng.chance(profile.bn_space_prob)

    # Standalone bound noun.
    if length >= 2 and rng.chance(0.6):
        j = 1 + rng.below(length - 1)
        if claim(j, 1):
            surfaces[j], tags[j] = rng.choice(BN_SURFACES), "BN"
            forced_space[j] = rng.chance(profile.bn_space_prob)

    # Auxiliary predicate after an ordinary token.
    if length >= 2 and rng.chance(0.6):
        j = 1 + rng.below(length - 1)
        if claim(j, 1):
            surfaces[j], tags[j] = rng.choice(VX_SURFACES), "VX"
            forced_space[j] = rng.chance(profile.vx_space_prob)

    # -아/-어 ending + 지 pair: excluded from spacing features either way.
    if length >= 3 and rng.chance(0.3):
        j = rng.below(length - 1)
        if claim(j, 2):
            surfaces[j], tags[j] = rng.choice(ENDING_A_EO_SURFACES), "ENDING"
            surfaces[j + 1], tags[j + 1] = "지", "VX"
            forced_space[j + 1] = rng.chance(0.2)

    # Comma schedule: position b means "b morphemes strictly before the comma".
    comma_positions: list[int] = []
    if profile.comma_sentence_prob > 0 and rng.chance(profile.comma_sentence_prob):
        per_sentence_rate = profile.comma_per_morpheme / profile.comma_sentence_prob
        count = _clamp(round(per_sentence_rate * length), 1, length)
        bias = profile.relative_position_bias
        half_width = min(bias, 1.0 - bias, 0.08)
        for _ in range(count):
            q = bias + (2.0 * rng.uniform() - 1.0) * half_width
            comma_positions.append(_clamp(round(q * length), 1, length))
        comma_positions.sort()

    if profile.comma_context_tag_count > 0:
        pool = profile.comma_context_tag_count
        for b in comma_positions:
            if b - 1 not in fixed:
                tags[b - 1] = f"T{rng.below(pool)}"
            if b < length and b not in fixed:
                tags[b] = f"T{rng.below(pool)}"

    builder = _SentenceBuilder()
    after_comma = False
    for slot in range(length):
        if slot in forced_space:
            new_eojeol = forced_space[slot]
        else:
            new_eojeol = after_comma or rng.chance(0.5)
        builder.add(surfaces[slot], tags[slot], new_eojeol)
        after_comma = False
        for b in comma_positions:
            if b == slot + 1:
                builder.add(",", COMMA_TAG, new_eojeol=False)
                after_comma = True
    builder.add(".", PERIOD_TAG, new_eojeol=False)
    return builder.build()


def generate_document(profile: StyleProfile, index: int) -> TaggedDocument:
    """Document `index` of the profile's stream; independent of other indices."""
    rng = Stream(draw(profile.seed, index))
    sentences = tuple(
        _generate_sentence(profile, rng) for _ in range(profile.sentences_per_doc)
    )
    return TaggedDocument(
        id=f"{profile.author}-{profile.genre}-{index:04d}",
        genre=profile.genre,
        author=profile.author,
        label=0 if profile.author == HUMAN_AUTHOR else 1,
        sentences=sentences,
    )


def generate_corpus(
    profile_a: StyleProfile, profile_b: StyleProfile, n_per_class: int
) -> Corpus:
    """n_per_class label-0 documents from profile_a, then n_per_class label-1
    documents from profile_b."""
    if n_per_class < 1:
        raise SynthError("n_per_class must be >= 1")
    if profile_a.author != HUMAN_AUTHOR:
        raise SynthError(
            f"profile_a.author must be {HUMAN_AUTHOR!r} (label 0), got {profile_a.author!r}"
        )
    if profile_b.author == HUMAN_AUTHOR:
        raise SynthError("profile_b.author must not be 'human' (label 1)")
    docs = [generate_document(profile_a, i) for i in range(n_per_class)]
    docs += [generate_document(profile_b, i) for i in range(n_per_class)]
    return Corpus(documents=tuple(docs))


def generate_multi(
    human_profile: StyleProfile, generator_profiles, n_per_class: int
) -> Corpus:
    """One human group plus any number of generator groups in a single corpus."""
    generator_profiles = list(generator_profiles)
    if not generator_profiles:
        raise SynthError("at least one generator profile is required")
    authors = [p.author for p in generator_profiles]
    if len(set(authors)) != len(authors):
        raise SynthError(f"generator authors must be distinct, got {authors}")
    corpus = generate_corpus(human_profile, generator_profiles[0], n_per_class)
    docs = list(corpus.documents)
    for profile in generator_profiles[1:]:
        if profile.author == HUMAN_AUTHOR:
            raise SynthError("generator profiles must not use author 'human'")
        docs += [generate_document(profile, i) for i in range(n_per_class)]
    return Corpus(documents=tuple(docs))


def contrast_profiles(seed_a: int = 101, seed_b: int = 202) -> tuple[StyleProfile, StyleProfile]:
    """A human-like / machine-like profile pair with well-separated statistics.

    The machine-like side uses commas in far more sentences, slightly more
    densely, placed later, in longer sentences, with more varied comma
    contexts but a much smaller overall tag vocabulary.
    """
    human = StyleProfile(
        comma_sentence_prob=0.2631,
        comma_per_morpheme=0.0113,
        relative_position_bias=0.09,
        bn_space_prob=0.85,
        vx_space_prob=0.55,
        tag_vocab_size=50,
        sentence_length_range=(10, 20),
        seed=seed_a,
        author=HUMAN_AUTHOR,
        comma_context_tag_count=1,
    )
    machine = StyleProfile(
        comma_sentence_prob=0.6103,
        comma_per_morpheme=0.0256,
        relative_position_bias=0.18,
        bn_space_prob=0.98,
        vx_space_prob=0.90,
        tag_vocab_size=3,
        sentence_length_range=(30, 50),
        seed=seed_b,
        author="synth-llm",
        comma_context_tag_count=40,
    )
    return human, machine


def variant(profile: StyleProfile, **overrides) -> StyleProfile:
    """Copy a profile with field overrides (author, seed etc.)."""
    return replace(profile, **overrides)
