import pytest
from hypothesis import given, strategies as st

import kostylo as k
import oracles as O
from kostylo.corpus import parse_document

from conftest import plain_doc


def doc_from_tags(sentences_tags, doc_id="d"):
    return parse_document(
        {
            "id": doc_id,
            "genre": "essay",
            "author": "human",
            "label": 0,
            "sentences": [
                [{"surface": f"s{i}", "tag": t, "eojeol": 0 if i == 0 else 1}
                 for i, t in enumerate(tags)]
                for tags in sentences_tags
            ],
        }
    )


def test_bigram_example():
    doc = doc_from_tags([["N", "V", "N", "V"]])
    assert k.pos_ngram_diversity(doc, 2) == pytest.approx(2 / 3)


def test_unigram_all_same():
    doc = doc_from_tags([["A"] * 5])
    assert k.pos_ngram_diversity(doc, 1) == pytest.approx(0.2)


def test_too_short_for_order_gives_zero():
    doc = doc_from_tags([["N", "V", "N"]])
    assert k.pos_ngram_diversity(doc, 5) == 0.0


def test_order_validated():
    doc = doc_from_tags([["N", "V"]])
    for bad in (0, 6, -1):
        with pytest.raises(ValueError):
            k.pos_ngram_diversity(doc, bad)


def test_vector_two_token_sentence():
    doc = doc_from_tags([["N", "V"]])
    vec = k.pos_ngram_feature_vector(doc)
    assert vec.diversity == {1: 1.0, 2: 1.0, 3: 0.0, 4: 0.0, 5: 0.0}


def test_vector_all_equal_ten_tokens():
    doc = doc_from_tags([["A"] * 10])
    vec = k.pos_ngram_feature_vector(doc)
    assert vec.diversity == pytest.approx(
        {1: 0.1, 2: 1 / 9, 3: 1 / 8, 4: 1 / 7, 5: 1 / 6}
    )


def test_windows_do_not_cross_sentences():
    # two 2-token sentences: no trigram anywhere
    doc = doc_from_tags([["N", "V"], ["N", "V"]])
    assert k.pos_ngram_diversity(doc, 3) == 0.0
    # bigrams pooled: {NV, NV} -> 1/2
    assert k.pos_ngram_diversity(doc, 2) == 0.5


def test_oracle_equivalence_on_fixtures(mini_corpus, spacing_corpus):
    for doc in list(mini_corpus) + list(spacing_corpus):
        pd = plain_doc(doc)
        for n in range(1, 6):
            assert k.pos_ngram_diversity(doc, n) == pytest.approx(
                O.pos_ngram_diversity(pd, n), abs=1e-12
            )


def test_oracle_equivalence_on_synth(small_synth_corpus):
    for doc in small_synth_corpus:
        pd = plain_doc(doc)
        vec = k.pos_ngram_feature_vector(doc)
        for n in range(1, 6):
            assert vec.diversity[n] == pytest.approx(O.pos_ngram_diversity(pd, n), abs=1e-12)


def test_all_distinct_tags_gives_one():
    doc = doc_from_tags([["A", "B", "C", "D"]])
    assert k.pos_ngram_diversity(doc, 1) == 1.0


@given(
    st.lists(
        st.lists(st.sampled_from("ABCD"), min_size=1, max_size=8),
        min_size=1,
        max_size=4,
    ),
    st.integers(min_value=1, max_value=5),
)
def test_bounds_and_oracle_property(sentences, n):
    doc = doc_from_tags(sentences)
    value = k.pos_ngram_diversity(doc, n)
    assert 0.0 <= value <= 1.0
    assert value == pytest.approx(O.pos_ngram_diversity(plain_doc(doc), n), abs=1e-12)


@given(
    st.lists(st.lists(st.sampled_from("ABCD"), min_size=1, max_size=8), min_size=1, max_size=3),
    st.integers(min_value=1, max_value=5),
)
def test_bijective_relabel_invariance(sentences, n):
    relabel = {"A": "W", "B": "X", "C": "Y", "D": "Z"}
    doc = doc_from_tags(sentences)
    renamed = doc_from_tags([[relabel[t] for t in tags] for tags in sentences])
    assert k.pos_ngram_diversity(doc, n) == k.pos_ngram_diversity(renamed, n)
