"""Frequency inventories of canonical structures and diversity statistics.

An inventory maps each canonical tree string to its occurrence count in a
corpus.  Because every word roots exactly one structure, the number of
structure tokens equals the word count of the source treebank, which makes
type/token ratios over structures directly comparable to lexical ones.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, TextIO

import numpy as np
from scipy import stats as _st

from .conllu import Treebank
from .extract import DEFAULT_CONFIG, ExtractionConfig, extract_sentence

INVENTORY_HEADER = "tree\tnode_count\thead_symbol\tabs_freq\trel_freq_per_million"


@dataclass(slots=True)
class InventoryEntry:
    count: int
    head_symbol: str
    node_count: int


@dataclass(slots=True)
class Inventory:
    corpus_id: str
    config: ExtractionConfig
    token_total: int
    entries: dict[str, InventoryEntry]

    @property
    def type_count(self) -> int:
        return len(self.entries)

    def sorted_items(self) -> list[tuple[str, InventoryEntry]]:
        """Entries by descending count, ties by ascending tree text."""
        return sorted(self.entries.items(), key=lambda kv: (-kv[1].count, kv[0]))


@dataclass(slots=True)
class InventoryStats:
    types: int
    tokens: int
    hapax_count: int
    hapax_share: float
    head_symbol_shares: dict[str, float]


@dataclass(slots=True)
class SttrSeries:
    segment_size: int
    per_segment_ttr: list[float]
    mean: float
    ci95_half_width: float

    @property
    def segment_count(self) -> int:
        return len(self.per_segment_ttr)


def build_inventory(
    treebank: Treebank,
    cfg: ExtractionConfig = DEFAULT_CONFIG,
) -> Inventory:
    """Count every structure of every sentence of a treebank."""
    entries: dict[str, InventoryEntry] = {}
    for sentence in treebank.sentences():
        for ct in extract_sentence(sentence, cfg):
            entry = entries.get(ct.text)
            if entry is None:
                entries[ct.text] = InventoryEntry(1, ct.head_symbol, ct.node_count)
            else:
                entry.count += 1
    return Inventory(treebank.corpus_id, cfg, treebank.word_total, entries)


def merge_inventories(a: Inventory, b: Inventory) -> Inventory:
    """Sum two inventories built with the same configuration."""
    if a.config != b.config:
        raise ValueError(
            f"config mismatch: {a.config.describe()!r} vs {b.config.describe()!r}")
    merged = {text: InventoryEntry(e.count, e.head_symbol, e.node_count)
              for text, e in a.entries.items()}
    for text, e in b.entries.items():
        got = merged.get(text)
        if got is None:
            merged[text] = InventoryEntry(e.count, e.head_symbol, e.node_count)
        else:
            got.count += e.count
    corpus_id = a.corpus_id if a.corpus_id == b.corpus_id else f"{a.corpus_id}+{b.corpus_id}"
    return Inventory(corpus_id, a.config, a.token_total + b.token_total, merged)


def inventory_stats(inv: Inventory) -> InventoryStats:
    """Type, hapax and head-symbol composition summary of an inventory."""
    types = len(inv.entries)
    hapax = sum(1 for e in inv.entries.values() if e.count == 1)
    shares: dict[str, float] = {}
    if inv.token_total:
        sums: dict[str, int] = {}
        for e in inv.entries.values():
            sums[e.head_symbol] = sums.get(e.head_symbol, 0) + e.count
        shares = {sym: c / inv.token_total for sym, c in sums.items()}
    return InventoryStats(
        types=types,
        tokens=inv.token_total,
        hapax_count=hapax,
        hapax_share=hapax / types if types else 0.0,
        head_symbol_shares=shares,
    )


def segmented_ttr(
    treebank: Treebank,
    cfg: ExtractionConfig = DEFAULT_CONFIG,
    segment_size: int = 1000,
) -> SttrSeries:
    """Type-token ratio averaged over consecutive fixed-size segments.

    Structures are laid out in corpus order (document, sentence, token) and
    cut into segments of ``segment_size`` structure tokens; a trailing
    partial segment is included.  The confidence half-width uses the Student
    t quantile with (segments - 1) degrees of freedom and is 0 for a single
    segment.
    """
    if segment_size < 1:
        raise ValueError("segment_size must be positive")
    if treebank.word_total < 1:
        raise ValueError("cannot segment an empty treebank")
    ttrs: list[float] = []
    seen: set[str] = set()
    filled = 0
    for sentence in treebank.sentences():
        for ct in extract_sentence(sentence, cfg):
            seen.add(ct.text)
            filled += 1
            if filled == segment_size:
                ttrs.append(len(seen) / filled)
                seen.clear()
                filled = 0
    if filled:
        ttrs.append(len(seen) / filled)
    mean = float(np.mean(ttrs))
    if len(ttrs) >= 2:
        sd = float(np.std(ttrs, ddof=1))
        half = float(_st.t.ppf(0.975, len(ttrs) - 1)) * sd / math.sqrt(len(ttrs))
    else:
        half = 0.0
    return SttrSeries(segment_size, ttrs, mean, half)


def write_inventory(inv: Inventory, out: TextIO) -> None:
    """Emit the inventory as deterministic TSV.

    Rows are sorted by descending count, ties by ascending tree text, so
    that identical inventories always produce identical bytes.
    """
    out.write(f"# token_total = {inv.token_total}\n")
    out.write(f"# config = {inv.config.describe()}\n")
    out.write(INVENTORY_HEADER + "\n")
    total = inv.token_total
    for text, e in inv.sorted_items():
        rel = e.count / total * 1e6 if total else 0.0
        out.write(f"{text}\t{e.node_count}\t{e.head_symbol}\t{e.count}\t{rel:.4f}\n")


def inventory_to_tsv(inv: Inventory) -> str:
    buf = io.StringIO()
    write_inventory(inv, buf)
    return buf.getvalue()


def save_inventory(inv: Inventory, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        write_inventory(inv, f)


def read_inventory(source: str | TextIO | Iterable[str], corpus_id: str = "") -> Inventory:
    """Read an inventory TSV produced by :func:`write_inventory`."""
    if isinstance(source, str):
        lines = source.split("\n")
    else:
        lines = (line.rstrip("\n") for line in source)
    token_total: int | None = None
    config: ExtractionConfig | None = None
    entries: dict[str, InventoryEntry] = {}
    header_seen = False
    for lineno, line in enumerate(lines, start=1):
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if "=" not in body:
                raise ValueError(f"line {lineno}: malformed inventory comment {line!r}")
            key, value = (part.strip() for part in body.split("=", 1))
            if key == "token_total":
                token_total = int(value)
            elif key == "config":
                config = ExtractionConfig.from_description(value)
            continue
        if not header_seen:
            if line != INVENTORY_HEADER:
                raise ValueError(f"line {lineno}: unexpected inventory header {line!r}")
            header_seen = True
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise ValueError(f"line {lineno}: expected 5 columns, got {len(fields)}")
        tree, node_count, head_symbol, count, _rel = fields
        entries[tree] = InventoryEntry(int(count), head_symbol, int(node_count))
    if token_total is None or config is None or not header_seen:
        raise ValueError("missing inventory header lines (token_total, config, column names)")
    return Inventory(corpus_id, config, token_total, entries)


def load_inventory(path: str | Path, corpus_id: str | None = None) -> Inventory:
    path = Path(path)
    with open(path, encoding="utf-8") as f:
        return read_inventory(f, corpus_id if corpus_id is not None else path.stem)
