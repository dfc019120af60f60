"""End-to-end spoken-vs-written comparison pipeline.

Given a multi-genre English treebank (split into spoken and written subsets
by document ids) and/or separate spoken and written Slovenian treebanks, the
pipeline builds punctuation-free and disfluency-free variants, extracts the
structure inventory of each, and emits every report as plot-ready TSV:
corpus size tables, type and hapax counts, segmented type-token ratios,
head-symbol composition, inventory overlap, and keyness rankings.

A manifest names every emitted file together with the table or figure id it
corresponds to (table1..table6, tableC1/C2, fig5..fig8, figB1..figB4), and a
checklist compares the pipeline's results against built-in reference values
so a run can be verified in one glance.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, TextIO

from .compare import (
    format_value,
    keyness_table,
    overlap_report,
    sttr_compare,
    write_keyness,
)
from .conllu import Treebank, parse_file
from .extract import DEFAULT_CONFIG
from .inventory import (
    Inventory,
    build_inventory,
    inventory_stats,
    save_inventory,
    segmented_ttr,
)
from .partition import GUM_PARTITION, partition_treebank
from .prune import DISFLUENCY_FREE, PUNCT_FREE, NormalizationStats, normalize_treebank

# Reference values the pipeline is expected to reproduce on the upstream
# 2.15 releases of the three treebanks.

# corpus -> (documents, sentences)
REF_DOCS_SENTS = {
    "gum_written": (143, 6493),
    "gum_spoken": (74, 5653),
    "ssj": (618, 13435),
    "sst": (344, 6108),
}

# corpus -> (words, words punct-free, words disfluency-free)
REF_WORDS = {
    "gum_written": (130990, 113354, 113199),
    "gum_spoken": (80930, 69611, 67031),
    "ssj": (267097, 227621, 227421),
    "sst": (98396, 76341, 68281),
}

# corpus -> distinct structure types, punctuation-free, default config
REF_TYPES = {
    "gum_spoken": 13429,
    "gum_written": 21759,
    "sst": 15284,
    "ssj": 43143,
}

# top NOUN-headed structures of written English, punctuation-free
REF_NOUN_TOP5 = (
    ("NOUN", 3638),
    ("DET <det NOUN", 1507),
    ("ADP <case NOUN", 1419),
    ("ADP <case DET <det NOUN", 1342),
    ("ADJ <amod NOUN", 636),
)

REF_HAPAX_MIN = 0.90

# language -> spoken types also attested in writing (share), tolerance 0.001
REF_OVERLAP_SHARE = {"english": 0.112, "slovenian": 0.091}

# language -> shared types among the top 200 of each corpus, tolerance 3
REF_TOP200_SHARED = {"english": 145, "slovenian": 124}

# keyness table id -> (focus freq, reference freq, formatted percent diff)
REF_KEYNESS_TOP = {
    "table5": (13, 0, "2.20E+21"),
    "table6": (11, 0, "3.66E+21"),
    "tableC1": (19, 0, "3.09E+21"),
    "tableC2": (54, 0, "1.61E+22"),
}

_CORPUS_ORDER = ("gum_spoken", "gum_written", "sst", "ssj")
_VARIANTS = (("punct_free", PUNCT_FREE), ("disfluency_free", DISFLUENCY_FREE))


@dataclass(slots=True)
class Artifact:
    filename: str
    reference: str
    description: str


@dataclass(slots=True)
class Check:
    name: str
    expected: str
    actual: str
    status: str  # "pass", "fail" or "skip"


@dataclass(slots=True)
class ReproductionReport:
    artifacts: list[Artifact]
    checks: list[Check]


class _Checker:
    def __init__(self) -> None:
        self.checks: list[Check] = []

    def equal(self, name: str, expected: object, actual: object) -> None:
        status = "pass" if actual == expected else "fail"
        self.checks.append(Check(name, str(expected), str(actual), status))

    def within(self, name: str, expected: float, actual: float, tol: float) -> None:
        status = "pass" if abs(actual - expected) <= tol else "fail"
        self.checks.append(Check(name, f"{expected}±{tol}", str(actual), status))

    def holds(self, name: str, expected: str, actual: str, ok: bool) -> None:
        self.checks.append(Check(name, expected, actual, "pass" if ok else "fail"))

    def skip(self, name: str, expected: object) -> None:
        self.checks.append(Check(name, str(expected), "", "skip"))


def load_corpus(path: str | Path, corpus_id: str, strict: bool = True) -> Treebank:
    """Load one treebank from a CoNLL-U file or a directory of them.

    Directory contents are concatenated in sorted filename order so reruns
    are deterministic.
    """
    p = Path(path)
    if p.is_dir():
        files = sorted(p.rglob("*.conllu"))
        if not files:
            raise ValueError(f"no .conllu files under {p}")
    elif p.exists():
        files = [p]
    else:
        raise FileNotFoundError(f"corpus not found: {p}")
    documents: list[tuple[str, list]] = []
    for f in files:
        result = parse_file(f, corpus_id=f.stem, strict=strict)
        documents.extend(result.treebank.documents)
    return Treebank.from_documents(corpus_id, documents)


def _emit(outdir: Path, artifacts: list[Artifact], filename: str, reference: str,
          description: str, write: Callable[[TextIO], None]) -> None:
    with open(outdir / filename, "w", encoding="utf-8", newline="\n") as f:
        write(f)
    artifacts.append(Artifact(filename, reference, description))


def _write_size_table(corpora: dict[str, Treebank],
                      norm_stats: dict[tuple[str, str], NormalizationStats],
                      names: tuple[str, ...]) -> Callable[[TextIO], None]:
    def write(out: TextIO) -> None:
        out.write("treebank\tdocuments\tsentences\twords\twords_no_punct\twords_no_disfluency\n")
        for name in names:
            tb = corpora[name]
            out.write("\t".join((
                name, str(tb.num_documents), str(tb.num_sentences), str(tb.word_total),
                str(norm_stats[name, "punct_free"].words_after),
                str(norm_stats[name, "disfluency_free"].words_after),
            )) + "\n")
    return write


def run_reproduction(
    outdir: Path,
    gum: str | Path | None = None,
    ssj: str | Path | None = None,
    sst: str | Path | None = None,
    segment_size: int = 1000,
    lenient: bool = False,
) -> ReproductionReport:
    """Run the full pipeline over whichever corpora are available.

    Reports for a missing language are not produced and its reference checks
    are marked "skip".  All outputs land in ``outdir``; rerunning on the
    same inputs produces byte-identical files.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    strict = not lenient
    artifacts: list[Artifact] = []
    checker = _Checker()

    corpora: dict[str, Treebank] = {}
    if gum is not None:
        subsets = partition_treebank(load_corpus(gum, "gum", strict), GUM_PARTITION)
        for subset in ("spoken", "written"):
            if subset not in subsets:
                raise ValueError(f"English data contains no {subset} documents")
        corpora["gum_spoken"] = subsets["spoken"]
        corpora["gum_written"] = subsets["written"]
    if ssj is not None:
        corpora["ssj"] = load_corpus(ssj, "ssj", strict)
    if sst is not None:
        corpora["sst"] = load_corpus(sst, "sst", strict)

    english = "gum_spoken" in corpora
    slovenian = "ssj" in corpora and "sst" in corpora
    present = tuple(n for n in _CORPUS_ORDER if n in corpora)

    normalized: dict[tuple[str, str], Treebank] = {}
    norm_stats: dict[tuple[str, str], NormalizationStats] = {}
    inventories: dict[tuple[str, str], Inventory] = {}
    for name in present:
        for variant, spec in _VARIANTS:
            tb, stats = normalize_treebank(corpora[name], spec)
            normalized[name, variant] = tb
            norm_stats[name, variant] = stats
            inv = build_inventory(tb, DEFAULT_CONFIG)
            inventories[name, variant] = inv
            filename = f"inventory_{name}_{variant}.tsv"
            save_inventory(inv, outdir / filename)
            artifacts.append(Artifact(
                filename, "-",
                f"structure inventory of {name}, {variant.replace('_', '-')}"))

    # Corpus size tables.
    if english:
        _emit(outdir, artifacts, "table1_corpus_sizes_english.tsv", "table1",
              "document/sentence/word counts of the English subsets",
              _write_size_table(corpora, norm_stats, ("gum_written", "gum_spoken")))
    if slovenian:
        _emit(outdir, artifacts, "table2_corpus_sizes_slovenian.tsv", "table2",
              "document/sentence/word counts of the Slovenian treebanks",
              _write_size_table(corpora, norm_stats, ("ssj", "sst")))

    # Type counts and hapax shares.
    for variant, fig in (("punct_free", "fig5"), ("disfluency_free", "figB1")):
        def write_types(out: TextIO, variant: str = variant) -> None:
            out.write("corpus\ttypes\thapax_count\thapax_share\tstructure_tokens\n")
            for name in present:
                stats = inventory_stats(inventories[name, variant])
                out.write("\t".join((
                    name, str(stats.types), str(stats.hapax_count),
                    format_value(stats.hapax_share), str(stats.tokens),
                )) + "\n")
        _emit(outdir, artifacts, f"{fig}_type_counts_{variant}.tsv", fig,
              f"distinct structures and hapax shares, {variant.replace('_', '-')}",
              write_types)

    # Segmented type-token ratios.
    sttr_series = {
        (name, variant): segmented_ttr(normalized[name, variant], DEFAULT_CONFIG, segment_size)
        for name in present for variant, _ in _VARIANTS
    }
    for variant, fig in (("punct_free", "fig6"), ("disfluency_free", "figB2")):
        def write_sttr(out: TextIO, variant: str = variant) -> None:
            out.write("corpus\tsegments\tmean_sttr\tci95_half_width\n")
            for name in present:
                series = sttr_series[name, variant]
                out.write("\t".join((
                    name, str(series.segment_count), format_value(series.mean),
                    format_value(series.ci95_half_width),
                )) + "\n")
        _emit(outdir, artifacts, f"{fig}_sttr_{variant}.tsv", fig,
              f"segmented type-token ratio (size {segment_size}), "
              f"{variant.replace('_', '-')}", write_sttr)

    pairs = []  # (language, spoken corpus, written corpus)
    if english:
        pairs.append(("english", "gum_spoken", "gum_written"))
    if slovenian:
        pairs.append(("slovenian", "sst", "ssj"))

    # Head-symbol composition differences (spoken vs written).
    for variant, fig in (("punct_free", "fig7"), ("disfluency_free", "figB3")):
        def write_comp(out: TextIO, variant: str = variant) -> None:
            out.write("language\thead_symbol\tshare_spoken\tshare_written\trel_diff\n")
            for language, spoken, written in pairs:
                stats_s = inventory_stats(inventories[spoken, variant])
                stats_w = inventory_stats(inventories[written, variant])
                for sym in sorted(set(stats_s.head_symbol_shares) | set(stats_w.head_symbol_shares)):
                    share_s = stats_s.head_symbol_shares.get(sym, 0.0)
                    share_w = stats_w.head_symbol_shares.get(sym, 0.0)
                    rel = float("inf") if share_w == 0.0 else (share_s - share_w) / share_w
                    out.write("\t".join((
                        language, sym, format_value(share_s), format_value(share_w),
                        format_value(rel),
                    )) + "\n")
        _emit(outdir, artifacts, f"{fig}_composition_{variant}.tsv", fig,
              f"relative difference of head-symbol shares, {variant.replace('_', '-')}",
              write_comp)

    # Inventory overlap at three frequency filters.
    overlaps: dict[tuple[str, str, str], object] = {}
    for variant, fig in (("punct_free", "fig8"), ("disfluency_free", "figB4")):
        def write_over(out: TextIO, variant: str = variant) -> None:
            out.write("language\tfilter\tshared\tonly_spoken\tonly_written\t"
                      "share_of_spoken\tshare_of_written\n")
            for language, spoken, written in pairs:
                inv_s = inventories[spoken, variant]
                inv_w = inventories[written, variant]
                for report in (
                    overlap_report(inv_s, inv_w),
                    overlap_report(inv_s, inv_w, min_freq=2),
                    overlap_report(inv_s, inv_w, top=200),
                ):
                    overlaps[language, variant, report.filter] = report
                    out.write("\t".join((
                        language, report.filter, str(report.shared),
                        str(report.only_a), str(report.only_b),
                        format_value(report.share_of_a), format_value(report.share_of_b),
                    )) + "\n")
        _emit(outdir, artifacts, f"{fig}_overlap_{variant}.tsv", fig,
              f"shared and modality-specific structure types, {variant.replace('_', '-')}",
              write_over)

    # Most frequent NOUN-headed structures of written English.
    noun_top: list[tuple[str, int]] = []
    if english:
        inv = inventories["gum_written", "punct_free"]
        noun_top = [(text, e.count) for text, e in inv.sorted_items()
                    if e.head_symbol == "NOUN"][:5]
        def write_nouns(out: TextIO) -> None:
            out.write("tree\tabs_freq\n")
            for text, count in noun_top:
                out.write(f"{text}\t{count}\n")
        _emit(outdir, artifacts, "table4_noun_trees_gum_written.tsv", "table4",
              "most frequent NOUN-headed structures in written English, punct-free",
              write_nouns)

    # Keyness rankings (spoken as focus, written as reference).
    keyness_specs = []  # (table id, language, variant)
    if english:
        keyness_specs += [("table5", "english", "disfluency_free"),
                          ("tableC1", "english", "punct_free")]
    if slovenian:
        keyness_specs += [("table6", "slovenian", "disfluency_free"),
                          ("tableC2", "slovenian", "punct_free")]
    keyness_top: dict[str, list] = {}
    for table_id, language, variant in sorted(keyness_specs):
        spoken, written = next((s, w) for lang, s, w in pairs if lang == language)
        rows = keyness_table(inventories[spoken, variant], inventories[written, variant],
                             mode="paper_magnitudes")
        keyness_top[table_id] = rows[:10]
        _emit(outdir, artifacts, f"{table_id}_keyness_{language}_{variant}.tsv", table_id,
              f"top speech-specific structures, {language}, {variant.replace('_', '-')}",
              lambda out, rows=rows: write_keyness(rows[:10], out))

    _run_checks(checker, present, english, slovenian, corpora, norm_stats,
                inventories, sttr_series, overlaps, noun_top, keyness_top)

    def write_checks(out: TextIO) -> None:
        out.write("check\tstatus\texpected\tactual\n")
        for c in checker.checks:
            out.write(f"{c.name}\t{c.status}\t{c.expected}\t{c.actual}\n")
    _emit(outdir, artifacts, "checks.tsv", "-",
          "reference-value checklist for this run", write_checks)

    with open(outdir / "manifest.tsv", "w", encoding="utf-8", newline="\n") as f:
        f.write("file\treference\tdescription\n")
        for a in artifacts:
            f.write(f"{a.filename}\t{a.reference}\t{a.description}\n")

    return ReproductionReport(artifacts, checker.checks)


def _run_checks(checker, present, english, slovenian, corpora, norm_stats,
                inventories, sttr_series, overlaps, noun_top, keyness_top) -> None:
    def available(name: str) -> bool:
        return name in present

    for name in _CORPUS_ORDER:
        docs, sents = REF_DOCS_SENTS[name]
        words, no_punct, no_disfluency = REF_WORDS[name]
        if not available(name):
            for metric, expected in (("documents", docs), ("sentences", sents),
                                     ("words", words), ("words_no_punct", no_punct),
                                     ("words_no_disfluency", no_disfluency)):
                checker.skip(f"{name}.{metric}", expected)
            continue
        tb = corpora[name]
        checker.equal(f"{name}.documents", docs, tb.num_documents)
        checker.equal(f"{name}.sentences", sents, tb.num_sentences)
        checker.equal(f"{name}.words", words, tb.word_total)
        checker.equal(f"{name}.words_no_punct", no_punct,
                      norm_stats[name, "punct_free"].words_after)
        checker.equal(f"{name}.words_no_disfluency", no_disfluency,
                      norm_stats[name, "disfluency_free"].words_after)

    for name in _CORPUS_ORDER:
        if not available(name):
            checker.skip(f"{name}.types_punct_free", REF_TYPES[name])
            checker.skip(f"{name}.hapax_share_punct_free", f">{REF_HAPAX_MIN}")
            continue
        inv = inventories[name, "punct_free"]
        checker.equal(f"{name}.types_punct_free", REF_TYPES[name], inv.type_count)
        stats = inventory_stats(inv)
        checker.holds(f"{name}.hapax_share_punct_free", f">{REF_HAPAX_MIN}",
                      format_value(stats.hapax_share), stats.hapax_share > REF_HAPAX_MIN)

    for i, (tree, count) in enumerate(REF_NOUN_TOP5, start=1):
        name = f"gum_written.noun_tree_{i}"
        if english:
            actual = noun_top[i - 1] if len(noun_top) >= i else ("", 0)
            checker.equal(name, f"{tree} = {count}", f"{actual[0]} = {actual[1]}")
        else:
            checker.skip(name, f"{tree} = {count}")

    for language in ("english", "slovenian"):
        have = english if language == "english" else slovenian
        share = REF_OVERLAP_SHARE[language]
        top200 = REF_TOP200_SHARED[language]
        if not have:
            checker.skip(f"{language}.overlap_share_all", share)
            checker.skip(f"{language}.overlap_top200_shared", top200)
            continue
        report_all = overlaps[language, "punct_free", "all"]
        checker.within(f"{language}.overlap_share_all", share,
                       round(report_all.share_of_a, 4), 0.001)
        report_top = overlaps[language, "punct_free", "top=200"]
        checker.within(f"{language}.overlap_top200_shared", top200, report_top.shared, 3)

    for table_id, (freq_focus, freq_ref, magnitude) in sorted(REF_KEYNESS_TOP.items()):
        have = english if table_id in ("table5", "tableC1") else slovenian
        expected = f"{freq_focus}/{freq_ref} %diff={magnitude}"
        if not have:
            checker.skip(f"{table_id}.top_row", expected)
            continue
        rows = keyness_top[table_id]
        if not rows:
            checker.holds(f"{table_id}.top_row", expected, "no rows", False)
            continue
        top = rows[0]
        actual = f"{top.freq_focus}/{top.freq_reference} %diff={format_value(top.percent_diff)}"
        ok = (top.freq_focus == freq_focus and top.freq_reference == freq_ref
              and format_value(top.percent_diff) == magnitude)
        checker.holds(f"{table_id}.top_row", expected, actual, ok)

    for language in ("english", "slovenian"):
        have = english if language == "english" else slovenian
        name = f"{language}.composition_signs"
        expected = "PRON,INTJ more spoken; NOUN,PROPN more written"
        if not have:
            checker.skip(name, expected)
        else:
            spoken = "gum_spoken" if language == "english" else "sst"
            written = "gum_written" if language == "english" else "ssj"
            shares_s = inventory_stats(inventories[spoken, "punct_free"]).head_symbol_shares
            shares_w = inventory_stats(inventories[written, "punct_free"]).head_symbol_shares
            def lean(sym):
                return shares_s.get(sym, 0.0) - shares_w.get(sym, 0.0)
            signs = {sym: lean(sym) for sym in ("PRON", "INTJ", "NOUN", "PROPN")}
            ok = (signs["PRON"] > 0 and signs["INTJ"] > 0
                  and signs["NOUN"] < 0 and signs["PROPN"] < 0)
            actual = " ".join(f"{sym}={value:+.4f}" for sym, value in signs.items())
            checker.holds(name, expected, actual, ok)

    for language in ("english", "slovenian"):
        have = english if language == "english" else slovenian
        name = f"{language}.sttr_spoken_below_written"
        if not have:
            checker.skip(name, "spoken mean < written mean, p<0.001")
            continue
        spoken = "gum_spoken" if language == "english" else "sst"
        written = "gum_written" if language == "english" else "ssj"
        series_s = sttr_series[spoken, "punct_free"]
        series_w = sttr_series[written, "punct_free"]
        if series_s.segment_count < 2 or series_w.segment_count < 2:
            checker.holds(name, "spoken mean < written mean, p<0.001",
                          "insufficient segments", False)
            continue
        cmp = sttr_compare(series_s, series_w)
        actual = (f"spoken={format_value(cmp.mean_a)} written={format_value(cmp.mean_b)} "
                  f"p={cmp.p_value:.2e}")
        checker.holds(name, "spoken mean < written mean, p<0.001", actual,
                      cmp.difference < 0 and cmp.p_value < 0.001)
