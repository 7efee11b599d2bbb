"""Command-line front end: bridge --input DIR --meta CSV --tagger NAME ...

Exit status 0 on success (even when some documents were skipped; the
skip report records them), 1 on any configuration or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import sys

from .convert import BridgeConfig, BridgeResult, tag_file


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bridge",
        description="Tag raw Korean text files into the corpus JSONL format.",
    )
    parser.add_argument("--input", required=True, metavar="DIR",
                        help="directory holding one <id>.txt per document")
    parser.add_argument("--meta", required=True, metavar="CSV",
                        help="sidecar with columns id,genre,author,label")
    parser.add_argument("--tagger", required=True, metavar="NAME",
                        help="analyzer adapter to use (e.g. kiwi, mecab)")
    parser.add_argument("--split-mode", default="punctuation", metavar="MODE",
                        help="sentence segmentation: tagger, punctuation or line")
    parser.add_argument("--out", required=True, metavar="FILE",
                        help="output JSONL path")
    return parser


def write_skip_report(result: BridgeResult, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["doc_id", "reason"])
        for entry in result.skipped:
            writer.writerow([entry.doc_id, entry.reason])


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = BridgeConfig(
        input_dir=args.input,
        meta_path=args.meta,
        tagger=args.tagger,
        out_path=args.out,
        split_mode=args.split_mode,
    )
    try:
        result = tag_file(config)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {result.written} documents to {result.out_path}")
    if result.skipped:
        report_path = f"{result.out_path}.skips.csv"
        write_skip_report(result, report_path)
        print(f"skipped {len(result.skipped)} documents (reasons in {report_path})")
    return 0


def entry() -> None:
    raise SystemExit(main())
