"""Command-line front end with deterministic TSV outputs.

Subcommands:

    normalize   delete branches by dependency label, write CoNLL-U
    split       assign documents to subsets by document id patterns
    extract     build a structure inventory TSV from a treebank
    stats       type/hapax/head-composition summary of an inventory
    sttr        segmented type-token ratio series for a treebank
    compare     overlap of two inventories under frequency filters
    keyness     frequency-difference ranking of two inventories
    compose     head-symbol composition difference of two inventories
    reproduce   run the full spoken-vs-written pipeline and check reference values

Exit codes: 0 on success, 1 on data or validation errors, 2 on usage errors.
Outputs are byte-deterministic for fixed inputs and flags.
"""
from __future__ import annotations

import argparse
import os
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, TextIO

from . import reproduce as _reproduce
from .compare import (
    format_value,
    keyness_table,
    overlap_report,
    write_composition,
    write_keyness,
    write_overlap,
)
from .conllu import ParseError, ParseResult, parse_file, write_treebank
from .extract import (
    EXTRACTION_KEYS,
    ConfigError,
    ExtractionConfig,
    extraction_config_from_items,
    read_config_items,
)
from .inventory import (
    build_inventory,
    inventory_stats,
    load_inventory,
    segmented_ttr,
    write_inventory,
)
from .partition import PRESETS as PARTITION_PRESETS
from .partition import PartitionError, load_partition_spec, partition_treebank
from .prune import PRESETS as PRUNE_PRESETS
from .prune import PruneSpec, normalize_treebank

CLI_CONFIG_KEYS = EXTRACTION_KEYS + ("segment_size", "prune_labels")

_ENV_OUTDIR = "SYNTREES_OUTDIR"


@contextmanager
def _open_out(path: str) -> Iterator[TextIO]:
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            yield f


def _read_config_file(path: str | None) -> dict[str, tuple[int, str]]:
    if path is None:
        return {}
    text = Path(path).read_text(encoding="utf-8")
    return read_config_items(text, CLI_CONFIG_KEYS)


def _resolve_extraction(args: argparse.Namespace,
                        file_items: dict[str, tuple[int, str]]) -> ExtractionConfig:
    """Defaults, overridden by config-file keys, overridden by flags."""
    items = {k: v for k, v in file_items.items() if k in EXTRACTION_KEYS}
    for key, flag_value in (
        ("node_type", args.node_type),
        ("labeled", args.labeled),
        ("label_subtypes", args.label_subtypes),
        ("fixed", args.fixed),
    ):
        if flag_value is not None:
            items[key] = (0, flag_value)
    return extraction_config_from_items(items)


def _resolve_segment_size(args: argparse.Namespace,
                          file_items: dict[str, tuple[int, str]]) -> int:
    if getattr(args, "segment_size", None) is not None:
        return args.segment_size
    if "segment_size" in file_items:
        lineno, value = file_items["segment_size"]
        try:
            size = int(value)
        except ValueError:
            raise ConfigError(f"line {lineno}: segment_size must be an integer, got {value!r}")
        if size < 1:
            raise ConfigError(f"line {lineno}: segment_size must be positive")
        return size
    return 1000


def _resolve_prune_spec(args: argparse.Namespace,
                        file_items: dict[str, tuple[int, str]]) -> PruneSpec:
    if args.preset is not None:
        return PRUNE_PRESETS[args.preset]
    if args.drop_labels is not None:
        labels = [part.strip() for part in args.drop_labels.split(",") if part.strip()]
        if not labels:
            raise ConfigError("--drop-labels needs at least one label")
        return PruneSpec(frozenset(labels))
    if "prune_labels" in file_items:
        lineno, value = file_items["prune_labels"]
        labels = [part.strip() for part in value.split(",") if part.strip()]
        if not labels:
            raise ConfigError(f"line {lineno}: prune_labels needs at least one label")
        return PruneSpec(frozenset(labels))
    raise ConfigError("no prune labels given (use --preset, --drop-labels, or prune_labels=)")


def _parse_input(args: argparse.Namespace) -> ParseResult:
    result = parse_file(args.input, corpus_id=args.corpus_id, strict=not args.lenient)
    for diag in result.diagnostics:
        print(f"{args.input}: {diag}", file=sys.stderr)
    return result


def _add_parse_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="input CoNLL-U file")
    p.add_argument("--corpus-id", default=None, help="corpus name (default: file stem)")
    p.add_argument("--lenient", action="store_true",
                   help="skip invalid sentences instead of failing")


def _add_extraction_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", default=None, help="key=value configuration file")
    p.add_argument("--node-type", dest="node_type", default=None,
                   choices=("upos", "xpos", "form", "lemma", "deprel", "none"))
    p.add_argument("--labeled", default=None, choices=("yes", "no"))
    p.add_argument("--label-subtypes", dest="label_subtypes", default=None,
                   choices=("yes", "no"))
    p.add_argument("--fixed", default=None, choices=("yes", "no"))


def _out_path(args: argparse.Namespace, default_name: str) -> str:
    if args.output is not None:
        return args.output
    outdir = os.environ.get(_ENV_OUTDIR)
    if outdir:
        return str(Path(outdir) / default_name)
    return default_name


def _cmd_normalize(args: argparse.Namespace) -> int:
    file_items = _read_config_file(args.config)
    spec = _resolve_prune_spec(args, file_items)
    result = _parse_input(args)
    normalized, stats = normalize_treebank(result.treebank, spec)
    with _open_out(_out_path(args, "normalized.conllu")) as out:
        write_treebank(normalized, out)
    if args.stats is not None:
        with _open_out(args.stats) as out:
            out.write("metric\tvalue\n")
            out.write(f"words_before\t{stats.words_before}\n")
            out.write(f"words_after\t{stats.words_after}\n")
            out.write(f"sentences_dropped\t{stats.sentences_dropped}\n")
            for label in sorted(stats.tokens_removed_by_label):
                out.write(f"removed:{label}\t{stats.tokens_removed_by_label[label]}\n")
    return 0


def _cmd_split(args: argparse.Namespace) -> int:
    if args.spec is not None:
        spec = load_partition_spec(Path(args.spec), default=args.default)
    else:
        spec = PARTITION_PRESETS[args.preset]
    result = _parse_input(args)
    subsets = partition_treebank(result.treebank, spec)
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    for name in sorted(subsets):
        path = outdir / f"{name}.conllu"
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            write_treebank(subsets[name], f)
        print(f"{name}\t{subsets[name].num_documents} documents\t"
              f"{subsets[name].word_total} words\t{path}")
    return 0


def _cmd_extract(args: argparse.Namespace) -> int:
    file_items = _read_config_file(args.config)
    cfg = _resolve_extraction(args, file_items)
    result = _parse_input(args)
    inv = build_inventory(result.treebank, cfg)
    with _open_out(_out_path(args, "inventory.tsv")) as out:
        write_inventory(inv, out)
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    inv = load_inventory(args.inventory)
    stats = inventory_stats(inv)
    with _open_out(_out_path(args, "stats.tsv")) as out:
        out.write("metric\tvalue\n")
        out.write(f"types\t{stats.types}\n")
        out.write(f"tokens\t{stats.tokens}\n")
        out.write(f"hapax_count\t{stats.hapax_count}\n")
        out.write(f"hapax_share\t{format_value(stats.hapax_share)}\n")
        for sym in sorted(stats.head_symbol_shares):
            out.write(f"head_share:{sym}\t{format_value(stats.head_symbol_shares[sym])}\n")
    return 0


def _cmd_sttr(args: argparse.Namespace) -> int:
    file_items = _read_config_file(args.config)
    cfg = _resolve_extraction(args, file_items)
    segment_size = _resolve_segment_size(args, file_items)
    result = _parse_input(args)
    series = segmented_ttr(result.treebank, cfg, segment_size)
    with _open_out(_out_path(args, "sttr.tsv")) as out:
        out.write(f"# segment_size = {series.segment_size}\n")
        out.write(f"# segments = {series.segment_count}\n")
        out.write(f"# mean = {format_value(series.mean)}\n")
        out.write(f"# ci95_half_width = {format_value(series.ci95_half_width)}\n")
        out.write("segment\tttr\n")
        for i, ttr in enumerate(series.per_segment_ttr, start=1):
            out.write(f"{i}\t{format_value(ttr)}\n")
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    a = load_inventory(args.inventory_a)
    b = load_inventory(args.inventory_b)
    reports = [overlap_report(a, b)]
    if args.min_freq is not None:
        reports.append(overlap_report(a, b, min_freq=args.min_freq))
    if args.top is not None:
        reports.append(overlap_report(a, b, top=args.top))
    with _open_out(_out_path(args, "overlap.tsv")) as out:
        write_overlap(reports, out)
    return 0


def _cmd_keyness(args: argparse.Namespace) -> int:
    focus = load_inventory(args.focus)
    reference = load_inventory(args.reference)
    mode = args.mode.replace("-", "_")
    rows = keyness_table(focus, reference, mode=mode, min_g2=args.min_g2)
    if args.top is not None:
        rows = rows[:args.top]
    with _open_out(_out_path(args, "keyness.tsv")) as out:
        write_keyness(rows, out)
    return 0


def _cmd_compose(args: argparse.Namespace) -> int:
    a = load_inventory(args.inventory_a)
    b = load_inventory(args.inventory_b)
    with _open_out(_out_path(args, "composition.tsv")) as out:
        write_composition(a, b, out)
    return 0


def _cmd_reproduce(args: argparse.Namespace) -> int:
    if args.gum is None and args.ssj is None and args.sst is None:
        print("reproduce needs at least one corpus: pass --gum (English) and/or "
              "both --ssj and --sst (Slovenian), each a CoNLL-U file or a "
              "directory of .conllu files", file=sys.stderr)
        return 1
    if (args.ssj is None) != (args.sst is None):
        print("Slovenian needs both --ssj (written) and --sst (spoken)", file=sys.stderr)
        return 1
    report = _reproduce.run_reproduction(
        outdir=Path(args.output),
        gum=args.gum,
        ssj=args.ssj,
        sst=args.sst,
        segment_size=args.segment_size,
        lenient=args.lenient,
    )
    for check in report.checks:
        print(f"{check.status}\t{check.name}\texpected={check.expected}\tactual={check.actual}")
    failed = sum(1 for c in report.checks if c.status == "fail")
    passed = sum(1 for c in report.checks if c.status == "pass")
    skipped = sum(1 for c in report.checks if c.status == "skip")
    print(f"checks: {passed} pass, {failed} fail, {skipped} skip; "
          f"{len(report.artifacts)} report files in {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syntrees",
        description="Extract and compare delexicalized dependency (sub)tree "
                    "inventories from CoNLL-U treebanks.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("normalize", help="delete branches by dependency label")
    _add_parse_flags(p)
    p.add_argument("-o", "--output", default=None, help="output CoNLL-U path ('-' for stdout)")
    p.add_argument("--preset", choices=sorted(PRUNE_PRESETS), default=None)
    p.add_argument("--drop-labels", default=None,
                   help="comma-separated core labels, e.g. punct,reparandum,discourse")
    p.add_argument("--config", default=None, help="key=value configuration file")
    p.add_argument("--stats", default=None, help="also write a normalization stats TSV")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("split", help="partition documents into subsets")
    _add_parse_flags(p)
    p.add_argument("-o", "--output", required=True, help="output directory")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", choices=sorted(PARTITION_PRESETS))
    group.add_argument("--spec", help="file of pattern<TAB>subset rules")
    p.add_argument("--default", choices=("error", "unassigned-bucket"), default="error",
                   help="what to do with unmatched documents (spec files only)")
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("extract", help="build a structure inventory TSV")
    _add_parse_flags(p)
    p.add_argument("-o", "--output", default=None, help="output TSV path ('-' for stdout)")
    _add_extraction_flags(p)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("stats", help="summarize an inventory TSV")
    p.add_argument("inventory", help="inventory TSV")
    p.add_argument("-o", "--output", default=None, help="output TSV path ('-' for stdout)")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("sttr", help="segmented type-token ratio series")
    _add_parse_flags(p)
    p.add_argument("-o", "--output", default=None, help="output TSV path ('-' for stdout)")
    _add_extraction_flags(p)
    p.add_argument("--segment-size", type=int, default=None)
    p.set_defaults(func=_cmd_sttr)

    p = sub.add_parser("compare", help="inventory overlap at frequency filters")
    p.add_argument("inventory_a")
    p.add_argument("inventory_b")
    p.add_argument("-o", "--output", default=None, help="output TSV path ('-' for stdout)")
    p.add_argument("--min-freq", type=int, default=None,
                   help="also report overlap of types with count >= K")
    p.add_argument("--top", type=int, default=None,
                   help="also report overlap of the top N types")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("keyness", help="frequency-difference ranking of two inventories")
    p.add_argument("focus")
    p.add_argument("reference")
    p.add_argument("-o", "--output", default=None, help="output TSV path ('-' for stdout)")
    p.add_argument("--mode", choices=("footnote", "paper-magnitudes"), default="footnote",
                   help="zero-reference handling (see percent_diff)")
    p.add_argument("--min-g2", type=float, default=0.0,
                   help="drop rows with log-likelihood below this value")
    p.add_argument("--top", type=int, default=None, help="keep only the first N rows")
    p.set_defaults(func=_cmd_keyness)

    p = sub.add_parser("compose", help="head-symbol composition difference")
    p.add_argument("inventory_a")
    p.add_argument("inventory_b")
    p.add_argument("-o", "--output", default=None, help="output TSV path ('-' for stdout)")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("reproduce",
                       help="full spoken-vs-written pipeline with reference checks")
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.add_argument("--gum", default=None,
                   help="multi-genre English treebank (file or directory)")
    p.add_argument("--ssj", default=None,
                   help="written Slovenian treebank (file or directory)")
    p.add_argument("--sst", default=None,
                   help="spoken Slovenian treebank (file or directory)")
    p.add_argument("--segment-size", type=int, default=1000)
    p.add_argument("--lenient", action="store_true",
                   help="skip invalid sentences instead of failing")
    p.set_defaults(func=_cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ConfigError, PartitionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
