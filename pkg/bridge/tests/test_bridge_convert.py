"""End-to-end conversion: raw text in, loadable corpus JSONL out.

These tests pull in the downstream corpus loader to prove the emitted
format is accepted verbatim; the bridge itself never imports it.
"""

import json
import warnings

import pytest
from kostylo import load_corpus

from kostylo_bridge import (
    BridgeConfig,
    BridgeError,
    DocumentSkippedWarning,
    EmptyInputWarning,
    TaggerAdapter,
    register_tagger,
    tag_file,
)

from bridge_helpers import run_bridge, write_inputs

ESSAY = "나는 어제 도서관에 갔다. 책을 세 권 읽었다."
POEM = "바람이 분다\n낙엽이 진다\n겨울이 온다"
ABSTRACT = "이 논문은 새로운 방법을 제안한다. 실험 결과는 표 1에 나타난다."


def load_quietly(path):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        return load_corpus(path)


def test_output_loads_through_downstream_loader(tmp_path):
    result, out_path = run_bridge(tmp_path, [
        ("doc-a", "essay", "human", 0, ESSAY),
        ("doc-b", "essay", "gpt-4o", 1, ESSAY.replace("나는", "저는")),
        ("doc-c", "paper_abstract", "human", 0, ABSTRACT),
    ])
    assert result.written == 3
    assert result.skipped == ()
    corpus = load_quietly(out_path)
    assert [doc.id for doc in corpus] == ["doc-a", "doc-b", "doc-c"]
    assert corpus.documents[1].author == "gpt-4o"
    assert corpus.documents[1].label == 1
    assert len(corpus.documents[0].sentences) == 2


def test_eojeol_count_matches_whitespace_count(tmp_path):
    _, out_path = run_bridge(tmp_path, [("doc-a", "essay", "human", 0, ESSAY)])
    corpus = load_quietly(out_path)
    sources = [seg for seg in (s.strip() for s in ESSAY.split(".")) if seg]
    for sentence, source in zip(corpus.documents[0].sentences, sources, strict=True):
        n_eojeols = len({tok.eojeol_index for tok in sentence.tokens})
        # the source segment lost its period to the naive re-split above
        assert n_eojeols == len((source + ".").split())


def test_line_mode_makes_each_poem_line_a_sentence(tmp_path):
    _, out_path = run_bridge(
        tmp_path, [("poem-1", "poetry", "human", 0, POEM)], split_mode="line"
    )
    corpus = load_quietly(out_path)
    doc = corpus.documents[0]
    assert len(doc.sentences) == 3
    for sentence, line in zip(doc.sentences, POEM.splitlines(), strict=True):
        assert len({tok.eojeol_index for tok in sentence.tokens}) == len(line.split())


def test_punctuation_mode_folds_poem_into_one_sentence(tmp_path):
    _, out_path = run_bridge(tmp_path, [("poem-1", "poetry", "human", 0, POEM)])
    corpus = load_quietly(out_path)
    assert len(corpus.documents[0].sentences) == 1


def test_record_shape_and_encoding(tmp_path):
    _, out_path = run_bridge(tmp_path, [("doc-a", "essay", "human", 0, ESSAY)])
    raw = out_path.read_text(encoding="utf-8")
    # ensure_ascii is off: Hangul appears unescaped
    assert "나" in raw
    record = json.loads(raw.splitlines()[0])
    assert list(record) == ["id", "genre", "author", "label", "sentences"]
    token = record["sentences"][0][0]
    assert list(token) == ["surface", "tag", "eojeol"]


def test_missing_text_file_is_skipped_and_reported(tmp_path):
    with pytest.warns(DocumentSkippedWarning, match="doc-gone"):
        result, out_path = run_bridge(tmp_path, [
            ("doc-a", "essay", "human", 0, ESSAY),
            ("doc-gone", "essay", "human", 0, None),
        ])
    assert result.written == 1
    assert [entry.doc_id for entry in result.skipped] == ["doc-gone"]
    assert "text file not found" in result.skipped[0].reason
    assert [doc.id for doc in load_quietly(out_path)] == ["doc-a"]


def test_blank_document_is_skipped(tmp_path):
    with pytest.warns(DocumentSkippedWarning, match="no sentences"):
        result, _ = run_bridge(tmp_path, [
            ("doc-a", "essay", "human", 0, ESSAY),
            ("doc-blank", "essay", "human", 0, "   \n  \n"),
        ])
    assert [entry.doc_id for entry in result.skipped] == ["doc-blank"]


def test_failing_backend_skips_the_document(tmp_path):
    class Flaky(TaggerAdapter):
        name = "flaky"

        def analyze(self, sentence):
            if "✘" in sentence:
                raise RuntimeError("unsupported character")
            return [(chunk, "NNG") for chunk in sentence.split()]

    register_tagger("flaky", Flaky)
    with pytest.warns(DocumentSkippedWarning, match="tagger failed"):
        result, out_path = run_bridge(
            tmp_path,
            [
                ("doc-ok", "essay", "human", 0, "무사히 끝났다."),
                ("doc-bad", "essay", "human", 0, "여기서 ✘ 멈춘다."),
            ],
            tagger="flaky",
        )
    assert result.written == 1
    assert result.skipped[0].doc_id == "doc-bad"
    assert "unsupported character" in result.skipped[0].reason
    assert [doc.id for doc in load_quietly(out_path)] == ["doc-ok"]


def test_tokenless_backend_output_skips_the_document(tmp_path):
    class Mute(TaggerAdapter):
        name = "mute"

        def analyze(self, sentence):
            return []

    register_tagger("mute", Mute)
    with pytest.warns(DocumentSkippedWarning, match="no tokens"):
        result, _ = run_bridge(
            tmp_path, [("doc-a", "essay", "human", 0, ESSAY)], tagger="mute"
        )
    assert result.written == 0


def test_misaligned_backend_output_skips_the_document(tmp_path):
    class Normalizer(TaggerAdapter):
        name = "normalizer"

        def analyze(self, sentence):
            # rewrites surfaces the way contraction-expanding analyzers do
            return [("하였다", "VV")]

    register_tagger("normalizer", Normalizer)
    with pytest.warns(DocumentSkippedWarning, match="does not match"):
        result, _ = run_bridge(
            tmp_path, [("doc-a", "essay", "human", 0, "했다.")], tagger="normalizer"
        )
    assert result.written == 0


def test_empty_metadata_writes_empty_corpus_with_warning(tmp_path):
    with pytest.warns(EmptyInputWarning, match="no documents"):
        result, out_path = run_bridge(tmp_path, [])
    assert result.written == 0
    assert result.skipped == ()
    assert out_path.exists()
    assert out_path.read_text(encoding="utf-8") == ""


def test_conversion_is_deterministic(tmp_path):
    docs = [
        ("doc-a", "essay", "human", 0, ESSAY),
        ("doc-b", "poetry", "solar", 1, POEM),
    ]
    _, first = run_bridge(tmp_path, docs, split_mode="line", name="first.jsonl")
    _, second = run_bridge(tmp_path, docs, split_mode="line", name="second.jsonl")
    assert first.read_bytes() == second.read_bytes()


def test_unknown_split_mode_is_an_error(tmp_path):
    input_dir, meta_path = write_inputs(tmp_path, [("doc-a", "essay", "human", 0, ESSAY)])
    config = BridgeConfig(
        input_dir=str(input_dir),
        meta_path=str(meta_path),
        tagger="rule",
        out_path=str(tmp_path / "out.jsonl"),
        split_mode="paragraph",
    )
    with pytest.raises(BridgeError, match="unknown split mode"):
        tag_file(config)


def test_unknown_tagger_is_an_error(tmp_path):
    input_dir, meta_path = write_inputs(tmp_path, [("doc-a", "essay", "human", 0, ESSAY)])
    config = BridgeConfig(
        input_dir=str(input_dir),
        meta_path=str(meta_path),
        tagger="nope",
        out_path=str(tmp_path / "out.jsonl"),
    )
    with pytest.raises(BridgeError, match="unknown tagger"):
        tag_file(config)
