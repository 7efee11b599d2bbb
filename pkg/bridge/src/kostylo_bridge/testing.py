"""A deterministic rule-based test double.

RuleTagger lets the pipeline run where no real analyzer is installed: it
partitions each eojeol by shallow suffix rules, so its surfaces always
concatenate back to the source eojeol exactly.  The tags are plausible
Sejong labels but NOT linguistic analysis; use it for plumbing tests and
demos only.
"""

from __future__ import annotations

from .segment import split_punctuation
from .taggers import TaggerAdapter, register_tagger

# Longest first so 에서 wins over 에, 이라고 over 이.
_PARTICLE_TAGS = (
    ("이라고", "JKQ"),
    ("라고", "JKQ"),
    ("에서", "JKB"),
    ("에게", "JKB"),
    ("으로", "JKB"),
    ("부터", "JKB"),
    ("까지", "JKB"),
    ("보다", "JKB"),
    ("처럼", "JKB"),
    ("은", "JX"),
    ("는", "JX"),
    ("도", "JX"),
    ("만", "JX"),
    ("이", "JKS"),
    ("가", "JKS"),
    ("을", "JKO"),
    ("를", "JKO"),
    ("과", "JC"),
    ("와", "JC"),
    ("의", "JKG"),
    ("에", "JKB"),
    ("로", "JKB"),
)

_FINAL_ENDINGS = frozenset("다요죠네까")
_PAST_SYLLABLES = frozenset("았었였겠했왔갔냈났됐썼졌봤줬랐렀")
_OPENERS = "“‘\"'([「『"
_CLOSERS = "”’\"')]」』"
_TERMINATORS = ".!?…"


def _trailing_tag(char: str) -> str:
    if char == ",":
        return "SP"
    if char in _TERMINATORS:
        return "SF"
    return "SS"


def _split_core(core: str) -> list[tuple[str, str]]:
    if core.isdigit():
        return [(core, "SN")]
    if len(core) >= 2 and core[-1] in _FINAL_ENDINGS:
        ending = [(core[-1], "EF")]
        stem = core[:-1]
        if len(stem) >= 2 and stem[-1] in _PAST_SYLLABLES:
            ending.insert(0, (stem[-1], "EP"))
            stem = stem[:-1]
        return [(stem, "VV")] + ending
    for particle, tag in _PARTICLE_TAGS:
        if core.endswith(particle) and len(core) > len(particle):
            stem = core[: -len(particle)]
            stem_tag = "SN" if stem.isdigit() else "NNG"
            return [(stem, stem_tag), (particle, tag)]
    return [(core, "NNG")]


class RuleTagger(TaggerAdapter):
    """Partition each eojeol with suffix rules; never fails, never drops."""

    name = "rule"

    def analyze(self, sentence: str) -> list[tuple[str, str]]:
        tokens: list[tuple[str, str]] = []
        for chunk in sentence.split():
            head: list[tuple[str, str]] = []
            tail: list[tuple[str, str]] = []
            while chunk and chunk[0] in _OPENERS:
                head.append((chunk[0], "SS"))
                chunk = chunk[1:]
            while chunk and (chunk[-1] in _CLOSERS or chunk[-1] in _TERMINATORS or chunk[-1] == ","):
                tail.insert(0, (chunk[-1], _trailing_tag(chunk[-1])))
                chunk = chunk[:-1]
            tokens.extend(head)
            if chunk:
                tokens.extend(_split_core(chunk))
            tokens.extend(tail)
        return tokens

    def split_sentences(self, text: str) -> list[str]:
        return split_punctuation(text)


def install() -> None:
    """Register RuleTagger under the name 'rule'."""
    register_tagger("rule", RuleTagger)


SAMPLE_SENTENCES = (
    "나는 어제 친구와 같이 밥을 먹었다.",
    "하늘이 맑고, 바람은 시원했다.",
    "그 연구는 세 가지 결과를 제시한다.",
    "우리는 도서관에서 책을 읽었다.",
    "봄이 오면, 꽃이 핀다.",
    "그는 학교에 가서 수업을 들었다.",
    "이 논문은 새로운 방법을 제안한다.",
    "오늘 날씨가 정말 좋다.",
    "당신은 어디에서 왔습니까?",
    "시간이 물처럼 흐른다.",
    "결과는 표 1에 나타난다.",
    "겨울 바다는 조용하고, 쓸쓸했다.",
    "그 시인은 밤마다 시를 썼다.",
    "모형은 입력을 받아서 확률을 계산한다.",
    "아이들이 운동장에서 공을 찼다.",
    "그는 고맙다고 말했다.",
    "연구진은 2023년에 자료를 모았다.",
    "바람이 불고, 낙엽이 떨어진다.",
    "이 방법은 기존 방식보다 빠르다.",
    "우리는 내일 다시 만나요.",
)
