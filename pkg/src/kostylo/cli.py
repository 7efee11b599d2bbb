"""Command-line interface.

    kostylo featurize --corpus docs.jsonl --tagmap sejong --feature-set all --out run/
    kostylo train     --corpus docs.jsonl --tagmap sejong --feature-set punctuation --out run/
    kostylo detect    --corpus new.jsonl --tagmap sejong --model run/model.json --out run/
    kostylo evaluate  --corpus docs.jsonl --tagmap sejong --genre essay --seeds 0,1,2,3,4 --out run/
    kostylo analyze   --corpus docs.jsonl --tagmap sejong --out run/
    kostylo synth     --human-profile h.json --llm-profile m.json --n-per-class 200 --out run/

Every subcommand accepts --config CONFIG.json whose keys are the long option
names with underscores; explicit command-line flags win over the config file,
which wins over built-in defaults. --out names a directory that is created if
missing. Errors go to stderr and the exit status is non-zero; output files are
written atomically (complete or absent, never truncated).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import (
    EmptyDistributionError,
    comma_pos_pair_distribution,
    heaps_curve,
    pos_before_comma_ratios,
    pos_distribution,
    zipf_curve,
)
from .classifier import (
    TrainConfig,
    ensemble_proba,
    load_model,
    model_to_dict,
    predict_proba,
    save_model,
    train_logreg,
)
from .corpus import Corpus, load_corpus, write_corpus
from .evaluation import (
    DEFAULT_SEEDS,
    DEFAULT_TRAIN_GENERATOR,
    run_protocol,
    write_report_csv,
    write_report_json,
)
from .features import (
    ALL_SETS,
    FEATURE_SETS,
    check_feature_set,
    extract_features,
    feature_matrix,
)
from .fileio import fmt_number, write_csv
from .synth import generate_multi, load_profile
from .tagmap import load_preset, load_tagmap, preset_names


def _resolve(args: argparse.Namespace, key: str, default):
    value = getattr(args, key, None)
    if value is not None:
        return value
    config = getattr(args, "config_data", None) or {}
    if key in config:
        return config[key]
    return default


def _load_tagmap_arg(name_or_path: str):
    if name_or_path in preset_names():
        return load_preset(name_or_path)
    if os.path.exists(name_or_path):
        return load_tagmap(name_or_path)
    raise ValueError(
        f"tagmap {name_or_path!r} is neither a preset ({', '.join(preset_names())}) "
        f"nor an existing file"
    )


def _parse_seeds(value) -> tuple[int, ...]:
    if isinstance(value, (list, tuple)):
        seeds = tuple(int(s) for s in value)
    else:
        parts = [p.strip() for p in str(value).split(",") if p.strip()]
        seeds = tuple(int(p) for p in parts)
    if not seeds:
        raise ValueError("at least one seed is required")
    return seeds


def _out_dir(args) -> str:
    out = _resolve(args, "out", None)
    if out is None:
        raise ValueError("--out is required (directory for output files)")
    os.makedirs(out, exist_ok=True)
    return out


def _feature_columns(feature_set: str) -> list[str]:
    if feature_set == "all":
        names: list[str] = []
        for set_name in ALL_SETS:
            names.extend(FEATURE_SETS[set_name])
        return names
    return list(FEATURE_SETS[feature_set])


def _extract_row(doc, tagmap, feature_set: str) -> list[float]:
    if feature_set == "all":
        row: list[float] = []
        for set_name in ALL_SETS:
            row.extend(extract_features(doc, tagmap, set_name))
        return row
    return extract_features(doc, tagmap, feature_set)


def cmd_featurize(args) -> None:
    corpus = load_corpus(_require(args, "corpus"))
    tagmap = _load_tagmap_arg(_require(args, "tagmap"))
    feature_set = _resolve(args, "feature_set", "all")
    check_feature_set(feature_set, allow_all=True)
    out = _out_dir(args)
    header = ["id", "genre", "author", "label"] + _feature_columns(feature_set)
    rows = []
    for doc in corpus:
        rows.append(
            [doc.id, doc.genre, doc.author, doc.label]
            + _extract_row(doc, tagmap, feature_set)
        )
    path = os.path.join(out, "features.csv")
    write_csv(path, header, rows)
    print(f"wrote {path} ({len(rows)} documents, {len(header) - 4} features)")


def cmd_train(args) -> None:
    corpus = load_corpus(_require(args, "corpus"))
    tagmap = _load_tagmap_arg(_require(args, "tagmap"))
    feature_set = _resolve(args, "feature_set", None)
    if feature_set is None:
        raise ValueError("--feature-set is required for train (spacing, pos_ngram or punctuation)")
    check_feature_set(feature_set, allow_all=False)
    config = TrainConfig(
        learning_rate=float(_resolve(args, "learning_rate", 0.1)),
        l2_lambda=float(_resolve(args, "l2_lambda", 1.0)),
        max_iterations=int(_resolve(args, "max_iterations", 5000)),
        tolerance=float(_resolve(args, "tolerance", 1e-8)),
    )
    seed = int(_resolve(args, "training_seed", 0))
    features = feature_matrix(corpus, tagmap, feature_set)
    labels = [doc.label for doc in corpus]
    model = train_logreg(
        features, labels, config=config, feature_set_id=feature_set, training_seed=seed
    )
    out = _out_dir(args)
    path = os.path.join(out, "model.json")
    save_model(model, path)
    print(
        f"trained {feature_set} model on {len(labels)} documents: "
        f"final_loss={fmt_number(model.final_loss)} iterations={model.iterations}"
    )
    print(f"wrote {path}")


def cmd_detect(args) -> None:
    corpus = load_corpus(_require(args, "corpus"))
    tagmap = _load_tagmap_arg(_require(args, "tagmap"))
    model_paths = _resolve(args, "model", None)
    if not model_paths:
        raise ValueError("at least one --model is required")
    if isinstance(model_paths, str):
        model_paths = [model_paths]
    models = [load_model(p) for p in model_paths]
    out = _out_dir(args)
    rows = []
    for doc in corpus:
        features_by_set = {}
        probs = []
        for model in models:
            set_id = model.feature_set_id
            if set_id not in features_by_set:
                features_by_set[set_id] = extract_features(doc, tagmap, set_id)
            probs.append(predict_proba(model, features_by_set[set_id]))
        p = ensemble_proba(probs)
        rows.append([doc.id, p, 1 if p > 0.5 else 0])
    path = os.path.join(out, "detections.csv")
    write_csv(path, ["id", "probability", "label"], rows)
    flagged = sum(r[2] for r in rows)
    print(f"wrote {path} ({len(rows)} documents, {flagged} flagged as generated)")


def cmd_evaluate(args) -> None:
    corpus = load_corpus(_require(args, "corpus"))
    tagmap = _load_tagmap_arg(_require(args, "tagmap"))
    feature_set = _resolve(args, "feature_set", "all")
    check_feature_set(feature_set, allow_all=True)
    sets = list(ALL_SETS) if feature_set == "all" else [feature_set]
    genre = _resolve(args, "genre", None)
    genres = [genre] if genre else sorted(corpus.genres())
    seeds = _parse_seeds(_resolve(args, "seeds", ",".join(str(s) for s in DEFAULT_SEEDS)))
    train_generator = _resolve(args, "train_generator", DEFAULT_TRAIN_GENERATOR)
    out = _out_dir(args)
    for g in genres:
        for set_name in sets:
            report = run_protocol(
                corpus,
                genre=g,
                feature_set_id=set_name,
                tagmap=tagmap,
                seeds=seeds,
                train_generator=train_generator,
            )
            base = os.path.join(out, f"report_{g}_{set_name}")
            write_report_json(report, base + ".json")
            write_report_csv(report, base + ".csv")
            targets = ", ".join(
                f"{t}={fmt_number(report.averages[t])}" for t in sorted(report.averages)
            )
            print(
                f"{g} / {set_name}: grand_average={fmt_number(report.grand_average)} ({targets})"
            )
            print(f"wrote {base}.json and {base}.csv")


def cmd_analyze(args) -> None:
    corpus = load_corpus(_require(args, "corpus"))
    tagmap = _load_tagmap_arg(_require(args, "tagmap"))
    out = _out_dir(args)
    authors = sorted(corpus.authors())

    before_rows = []
    pair_rows = []
    dist_rows = []
    zipf_rows = []
    heaps_rows = []
    for author in authors:
        group = corpus.filter(author=author)
        ratios = pos_before_comma_ratios(group, tagmap)
        before_rows.extend([author, tag, ratios[tag]] for tag in sorted(ratios))
        try:
            pairs = comma_pos_pair_distribution(group, tagmap)
            pair_rows.extend(
                [author, before, after, pairs[(before, after)]]
                for before, after in sorted(pairs)
            )
        except EmptyDistributionError as exc:
            print(f"warning: skipping comma pair distribution for {author!r}: {exc}", file=sys.stderr)
        shares = pos_distribution(group, tagmap)
        dist_rows.extend([author, category, shares[category]] for category in sorted(shares))
        zipf = zipf_curve(group)
        zipf_rows.extend(
            [author, rank, word, freq]
            for (rank, freq), word in zip(zipf.points, zipf.words)
        )
        heaps = heaps_curve(group)
        heaps_rows.extend([author, seen, vocab] for seen, vocab in heaps.points)

    outputs = [
        ("pos_before_comma.csv", ["author", "tag", "ratio"], before_rows),
        ("comma_pairs.csv", ["author", "tag_before", "tag_after", "proportion"], pair_rows),
        ("pos_distribution.csv", ["author", "category", "share"], dist_rows),
        ("zipf.csv", ["author", "rank", "word", "frequency"], zipf_rows),
        ("heaps.csv", ["author", "tokens_seen", "vocab_size"], heaps_rows),
    ]
    for name, header, rows in outputs:
        path = os.path.join(out, name)
        write_csv(path, header, rows)
        print(f"wrote {path} ({len(rows)} rows)")


def cmd_synth(args) -> None:
    human_path = _resolve(args, "human_profile", None)
    if not human_path:
        raise ValueError("--human-profile is required")
    llm_paths = _resolve(args, "llm_profile", None)
    if not llm_paths:
        raise ValueError("at least one --llm-profile is required")
    if isinstance(llm_paths, str):
        llm_paths = [llm_paths]
    human = load_profile(human_path)
    generators = [load_profile(p) for p in llm_paths]
    n = int(_resolve(args, "n_per_class", 200))
    corpus = generate_multi(human, generators, n)
    out = _out_dir(args)
    path = os.path.join(out, "corpus.jsonl")
    write_corpus(corpus, path)
    print(f"wrote {path} ({len(corpus)} documents, {len(generators)} generator groups)")


def _require(args, key: str):
    value = _resolve(args, key, None)
    if value is None:
        flag = "--" + key.replace("_", "-")
        raise ValueError(f"{flag} is required")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kostylo",
        description="Stylometric detection of machine-generated Korean text "
        "from POS-tagged corpora.",
    )
    sub = parser.add_subparsers(dest="command")

    def add_common(p, *, corpus=True, tagmap=True):
        if corpus:
            p.add_argument("--corpus", help="input corpus (JSONL, one tagged document per line)")
        if tagmap:
            p.add_argument("--tagmap", help="tag map: preset name or JSON file path")
        p.add_argument("--out", help="output directory (created if missing)")
        p.add_argument("--config", help="JSON config file; flags override its values")

    p = sub.add_parser("featurize", help="write per-document feature vectors as CSV")
    add_common(p)
    p.add_argument("--feature-set", dest="feature_set",
                   help="spacing, pos_ngram, punctuation or all (default all)")
    p.set_defaults(handler=cmd_featurize)

    p = sub.add_parser("train", help="fit a logistic-regression detector")
    add_common(p)
    p.add_argument("--feature-set", dest="feature_set",
                   help="spacing, pos_ngram or punctuation")
    p.add_argument("--learning-rate", dest="learning_rate", type=float)
    p.add_argument("--l2-lambda", dest="l2_lambda", type=float)
    p.add_argument("--max-iterations", dest="max_iterations", type=int)
    p.add_argument("--tolerance", dest="tolerance", type=float)
    p.add_argument("--training-seed", dest="training_seed", type=int)
    p.set_defaults(handler=cmd_train)

    p = sub.add_parser("detect", help="score documents with one or more models")
    add_common(p)
    p.add_argument("--model", action="append",
                   help="model JSON path; repeat to average an ensemble")
    p.set_defaults(handler=cmd_detect)

    p = sub.add_parser("evaluate", help="unseen-generator AUC protocol")
    add_common(p)
    p.add_argument("--feature-set", dest="feature_set",
                   help="spacing, pos_ngram, punctuation or all (default all)")
    p.add_argument("--genre", help="restrict to one genre (default: every genre present)")
    p.add_argument("--seeds", help="comma-separated split seeds (default 0,1,2,3,4)")
    p.add_argument("--train-generator", dest="train_generator",
                   help="generator author whose documents join the training split")
    p.set_defaults(handler=cmd_evaluate)

    p = sub.add_parser("analyze", help="per-author descriptive statistics as CSV")
    add_common(p)
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("synth", help="generate a synthetic corpus from style profiles")
    add_common(p, corpus=False, tagmap=False)
    p.add_argument("--human-profile", dest="human_profile", help="style profile JSON, label 0")
    p.add_argument("--llm-profile", dest="llm_profile", action="append",
                   help="style profile JSON, label 1; repeatable")
    p.add_argument("--n-per-class", dest="n_per_class", type=int,
                   help="documents per group (default 200)")
    p.set_defaults(handler=cmd_synth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "handler", None):
        parser.print_help(sys.stderr)
        return 1
    config_path = getattr(args, "config", None)
    if config_path:
        try:
            with open(config_path, "r", encoding="utf-8") as fh:
                args.config_data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read config {config_path}: {exc}", file=sys.stderr)
            return 1
        if not isinstance(args.config_data, dict):
            print(f"error: config {config_path} must hold a JSON object", file=sys.stderr)
            return 1
    else:
        args.config_data = {}
    try:
        args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
