import os

import pytest

import kostylo as k

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


def plain_doc(doc):
    """kostylo document -> the plain nested-tuple layout oracles.py expects."""
    return [[(t.surface, t.tag, t.eojeol_index) for t in s.tokens] for s in doc.sentences]


def plain_tagmap(tagmap):
    """kostylo tag map -> (mapping dict, rule dicts) for oracles.py."""
    mapping = {tag: category.value for tag, category in tagmap.mapping.items()}
    rules = [
        {
            "prev_category": r.prev_category.value,
            "prev_surface_suffixes": list(r.prev_surface_suffixes),
            "curr_category": r.curr_category.value,
            "curr_surfaces": list(r.curr_surfaces),
        }
        for r in tagmap.exclusion_rules
    ]
    return mapping, rules


@pytest.fixture(scope="session")
def mini_corpus():
    return k.load_corpus(fixture_path("mini_corpus.jsonl"))


@pytest.fixture(scope="session")
def spacing_corpus():
    return k.load_corpus(fixture_path("spacing_small.jsonl"))


@pytest.fixture(scope="session")
def sejong():
    return k.load_preset("sejong")


@pytest.fixture(scope="session")
def synth_tagmap():
    return k.synthetic_tagmap()


@pytest.fixture(scope="session")
def small_synth_corpus():
    """50 short deterministic documents (both profile families)."""
    human, machine = k.contrast_profiles()
    small_h = k.variant(human, sentences_per_doc=2, sentence_length_range=(3, 8))
    small_m = k.variant(machine, sentences_per_doc=2, sentence_length_range=(4, 9))
    return k.generate_corpus(small_h, small_m, 25)
