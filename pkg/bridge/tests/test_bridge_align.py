"""Eojeol reconstruction from tagger output."""

import pytest

from kostylo_bridge import AlignmentError, align_eojeols
from kostylo_bridge.testing import SAMPLE_SENTENCES, RuleTagger


def rebuild(tokens):
    """Concatenate surfaces per eojeol index, in order."""
    groups: dict[int, list[str]] = {}
    for tok in tokens:
        groups.setdefault(tok["eojeol"], []).append(tok["surface"])
    return ["".join(groups[i]) for i in sorted(groups)]


def test_three_eojeols_example():
    text = "나는 밥을 먹었다."
    tokens = align_eojeols(RuleTagger().analyze(text), text)
    indices = [tok["eojeol"] for tok in tokens]
    assert indices[0] == 0
    assert sorted(set(indices)) == [0, 1, 2]
    boundaries = sum(1 for a, b in zip(indices, indices[1:]) if b == a + 1)
    assert boundaries == 2


@pytest.mark.parametrize("text", SAMPLE_SENTENCES)
def test_indices_start_at_zero_and_step_by_at_most_one(text):
    tokens = align_eojeols(RuleTagger().analyze(text), text)
    indices = [tok["eojeol"] for tok in tokens]
    assert indices[0] == 0
    assert all(b - a in (0, 1) for a, b in zip(indices, indices[1:]))


@pytest.mark.parametrize("text", SAMPLE_SENTENCES)
def test_surfaces_rebuild_each_eojeol(text):
    tokens = align_eojeols(RuleTagger().analyze(text), text)
    assert rebuild(tokens) == text.split()


@pytest.mark.parametrize("text", SAMPLE_SENTENCES)
def test_eojeol_count_equals_whitespace_token_count(text):
    tokens = align_eojeols(RuleTagger().analyze(text), text)
    assert len({tok["eojeol"] for tok in tokens}) == len(text.split())


def test_rejects_mismatched_surface():
    with pytest.raises(AlignmentError, match="does not match"):
        align_eojeols([("밤", "NNG"), ("을", "JKO")], "밥을")


def test_rejects_surface_spanning_eojeols():
    with pytest.raises(AlignmentError, match="does not match"):
        align_eojeols([("밥을먹", "NNG")], "밥을 먹다")


def test_rejects_uncovered_eojeol():
    with pytest.raises(AlignmentError, match="not fully covered"):
        align_eojeols([("밥", "NNG"), ("을", "JKO")], "밥을 먹다")


def test_rejects_partially_consumed_eojeol():
    with pytest.raises(AlignmentError, match="not fully covered"):
        align_eojeols([("밥", "NNG")], "밥을")


def test_rejects_tokens_past_the_end():
    with pytest.raises(AlignmentError, match="past the end"):
        align_eojeols([("밥", "NNG"), ("을", "JKO"), ("더", "MAG")], "밥을")


def test_rejects_empty_surface_and_empty_tag():
    with pytest.raises(AlignmentError, match="empty surface"):
        align_eojeols([("", "NNG")], "밥")
    with pytest.raises(AlignmentError, match="empty tag"):
        align_eojeols([("밥", "")], "밥")


def test_empty_sentence_with_no_tokens_is_empty():
    assert align_eojeols([], "") == []
