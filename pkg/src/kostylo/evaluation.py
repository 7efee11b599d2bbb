"""Rank-based AUC-ROC, the unseen-generator split protocol and report assembly.

The protocol trains on one generator's text plus most of the human text, then
scores text from generators never seen in training. Repetition across seeds
re-randomizes only the human permutation; training itself is deterministic.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .classifier import TrainConfig, predict_proba_batch, train_logreg
from .corpus import Corpus, HUMAN_AUTHOR, TaggedDocument
from .features import check_feature_set, extract_features
from .fileio import atomic_writer, fmt_number, write_csv
from .rng import Stream
from .tagmap import CanonicalTagMap

REPORT_FORMAT_VERSION = 1
DEFAULT_SEEDS = (0, 1, 2, 3, 4)
DEFAULT_TRAIN_GENERATOR = "gpt-4o"


class EvaluationError(ValueError):
    pass


def auc_roc(scores, labels) -> float:
    """Mann-Whitney AUC with midrank tie handling.

    (sum of positive midranks - P(P+1)/2) / (P*N) over pooled 1-based ranks.
    """
    scores = list(scores)
    labels = list(labels)
    if len(scores) != len(labels):
        raise EvaluationError(
            f"scores and labels lengths differ: {len(scores)} vs {len(labels)}"
        )
    if not all(y in (0, 1) for y in labels):
        raise EvaluationError("labels must be 0 or 1")
    p = sum(labels)
    n = len(labels) - p
    if p == 0 or n == 0:
        raise EvaluationError("auc_roc requires both classes present")

    order = sorted(range(len(scores)), key=lambda i: scores[i])
    midranks = [0.0] * len(scores)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and scores[order[j + 1]] == scores[order[i]]:
            j += 1
        # tied block occupies ranks i+1 .. j+1; every member gets the mean rank
        mid = (i + 1 + j + 1) / 2
        for k in range(i, j + 1):
            midranks[order[k]] = mid
        i = j + 1
    positive_rank_sum = sum(r for r, y in zip(midranks, labels) if y == 1)
    return (positive_rank_sum - p * (p + 1) / 2) / (p * n)


@dataclass(frozen=True)
class SplitSpec:
    genre: str
    train_human_fraction: float = 0.8
    train_generator: str = DEFAULT_TRAIN_GENERATOR
    test_generators: tuple[str, ...] = ()
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.train_human_fraction < 1:
            raise EvaluationError("train_human_fraction must be strictly between 0 and 1")
        if not self.test_generators:
            raise EvaluationError("test_generators must be non-empty")
        if self.train_generator in self.test_generators:
            raise EvaluationError(
                f"train generator {self.train_generator!r} cannot also be a test generator"
            )


def _author_docs(docs: list[TaggedDocument], author: str, genre: str) -> list[TaggedDocument]:
    group = [d for d in docs if d.author == author]
    if not group:
        raise EvaluationError(f"no documents for author {author!r} in genre {genre!r}")
    return group


def make_ood_split(corpus: Corpus, spec: SplitSpec) -> tuple[Corpus, dict[str, Corpus]]:
    """Seeded human split; train = most humans + the train generator's text.

    Human documents of the genre are permuted by a seeded Fisher-Yates shuffle;
    the first floor(fraction * H) join every train-generator document to form
    the training corpus, the rest pair with each test generator separately.
    """
    docs = [d for d in corpus if d.genre == spec.genre]
    humans = _author_docs(docs, HUMAN_AUTHOR, spec.genre)
    train_gen_docs = _author_docs(docs, spec.train_generator, spec.genre)
    test_gen_docs = {g: _author_docs(docs, g, spec.genre) for g in spec.test_generators}

    permuted = Stream(spec.seed).shuffled(humans)
    n_train = math.floor(spec.train_human_fraction * len(humans))
    train_humans = permuted[:n_train]
    test_humans = permuted[n_train:]

    train = Corpus(tuple(train_humans) + tuple(train_gen_docs))
    tests = {
        g: Corpus(tuple(test_humans) + tuple(group)) for g, group in test_gen_docs.items()
    }
    return train, tests


@dataclass(frozen=True)
class EvaluationReport:
    genre: str
    feature_set_id: str
    seeds: tuple[int, ...]
    per_target: dict[str, tuple[float, ...]]
    averages: dict[str, float] = field(default_factory=dict)
    grand_average: float = 0.0


def _mean(values) -> float:
    values = list(values)
    return sum(values) / len(values)


def run_protocol(
    corpus: Corpus,
    genre: str,
    feature_set_id: str,
    tagmap: CanonicalTagMap,
    config: TrainConfig = TrainConfig(),
    seeds=DEFAULT_SEEDS,
    train_generator: str = DEFAULT_TRAIN_GENERATOR,
    test_generators=None,
) -> EvaluationReport:
    """Split / train / score for every seed; assemble the per-target report."""
    check_feature_set(feature_set_id)
    seeds = tuple(seeds)
    if not seeds:
        raise EvaluationError("seeds must be non-empty")
    if test_generators is None:
        test_generators = tuple(
            a
            for a in corpus.filter(genre=genre).authors()
            if a not in (HUMAN_AUTHOR, train_generator)
        )
    test_generators = tuple(test_generators)

    # Features depend only on the document, so extract once across all seeds.
    cache: dict[str, list[float]] = {}

    def featurize(docs) -> list[list[float]]:
        rows = []
        for doc in docs:
            if doc.id not in cache:
                cache[doc.id] = extract_features(doc, tagmap, feature_set_id)
            rows.append(cache[doc.id])
        return rows

    per_target: dict[str, list[float]] = {g: [] for g in test_generators}
    for seed in seeds:
        spec = SplitSpec(
            genre=genre,
            train_generator=train_generator,
            test_generators=test_generators,
            seed=seed,
        )
        train, tests = make_ood_split(corpus, spec)
        model = train_logreg(
            featurize(train.documents),
            [d.label for d in train.documents],
            config,
            feature_set_id=feature_set_id,
            training_seed=seed,
        )
        for target in test_generators:
            test = tests[target]
            scores = predict_proba_batch(model, featurize(test.documents))
            per_target[target].append(
                auc_roc(scores.tolist(), [d.label for d in test.documents])
            )

    averages = {g: _mean(v) for g, v in per_target.items()}
    return EvaluationReport(
        genre=genre,
        feature_set_id=feature_set_id,
        seeds=seeds,
        per_target={g: tuple(v) for g, v in per_target.items()},
        averages=averages,
        grand_average=_mean(averages.values()),
    )


def report_to_dict(report: EvaluationReport) -> dict:
    return {
        "genre": report.genre,
        "feature_set_id": report.feature_set_id,
        "seeds": list(report.seeds),
        "per_target": {g: list(v) for g, v in report.per_target.items()},
        "averages": dict(report.averages),
        "grand_average": report.grand_average,
        "format_version": REPORT_FORMAT_VERSION,
    }


def write_report_json(report: EvaluationReport, path) -> None:
    with atomic_writer(path) as fh:
        json.dump(report_to_dict(report), fh, indent=2)
        fh.write("\n")


def write_report_csv(report: EvaluationReport, path) -> None:
    rows = []
    for target, values in report.per_target.items():
        for seed, auc in zip(report.seeds, values):
            rows.append(
                (report.genre, report.feature_set_id, target, str(seed), fmt_number(auc))
            )
    write_csv(path, ["genre", "feature_set", "target", "seed", "auc"], rows)
