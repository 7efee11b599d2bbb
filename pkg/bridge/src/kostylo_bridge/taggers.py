"""Adapters around installed Korean morphological analyzers.

The bridge does no analysis of its own: each adapter wraps one backend
package behind a uniform call surface and passes its tags through
unmodified.  Backends are imported lazily so that merely selecting a
tagger by name gives an actionable message when the package is missing.
"""

from __future__ import annotations

from typing import Callable

from .errors import BridgeError, TaggerUnavailableError


class TaggerAdapter:
    """One analyzer behind a uniform surface.

    `analyze` returns (surface, tag) pairs in source order for a single
    sentence.  `split_sentences` exposes the backend's own sentence
    segmenter when it has one; adapters without one return None and the
    caller must pick a different split mode.
    """

    name: str = ""

    def analyze(self, sentence: str) -> list[tuple[str, str]]:
        raise NotImplementedError

    def split_sentences(self, text: str) -> list[str] | None:
        return None


class KiwiTagger(TaggerAdapter):
    """kiwipiepy backend."""

    name = "kiwi"

    def __init__(self) -> None:
        try:
            from kiwipiepy import Kiwi
        except ImportError as exc:
            raise TaggerUnavailableError(
                "tagger 'kiwi' needs the kiwipiepy package; "
                "install it with: pip install kiwipiepy"
            ) from exc
        self._kiwi = Kiwi()

    def analyze(self, sentence: str) -> list[tuple[str, str]]:
        return [(token.form, token.tag) for token in self._kiwi.tokenize(sentence)]

    def split_sentences(self, text: str) -> list[str]:
        return [sent.text for sent in self._kiwi.split_into_sents(text)]


class MecabTagger(TaggerAdapter):
    """python-mecab-ko backend.  No native sentence segmenter."""

    name = "mecab"

    def __init__(self) -> None:
        try:
            from mecab import MeCab
        except ImportError as exc:
            raise TaggerUnavailableError(
                "tagger 'mecab' needs the python-mecab-ko package; "
                "install it with: pip install python-mecab-ko"
            ) from exc
        self._mecab = MeCab()

    def analyze(self, sentence: str) -> list[tuple[str, str]]:
        return list(self._mecab.pos(sentence))


_FACTORIES: dict[str, Callable[[], TaggerAdapter]] = {
    "kiwi": KiwiTagger,
    "mecab": MecabTagger,
}


def register_tagger(name: str, factory: Callable[[], TaggerAdapter]) -> None:
    """Add an adapter factory; a later registration shadows an earlier one."""
    if not name:
        raise BridgeError("tagger name must be non-empty")
    _FACTORIES[name] = factory


def available_taggers() -> tuple[str, ...]:
    return tuple(sorted(_FACTORIES))


def get_tagger(name: str) -> TaggerAdapter:
    """Instantiate the named adapter, importing its backend."""
    try:
        factory = _FACTORIES[name]
    except KeyError:
        known = ", ".join(available_taggers())
        raise BridgeError(f"unknown tagger {name!r} (available: {known})") from None
    return factory()
