"""Splitting multi-genre treebanks into subsets by document id patterns.

The built-in GUM spec assigns documents to "spoken" and "written" subsets by
the genre infix of their ids ("GUM_interview_ants" is spoken,
"GUM_news_soccer" is written).  Custom rules can be loaded from a spec file
of "pattern<TAB>subset" lines; patterns are regular expressions searched in
the document id, and the first matching rule wins.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from .conllu import Treebank

UNMATCHED_MODES = ("error", "unassigned-bucket")
UNASSIGNED_SUBSET = "unassigned"


class PartitionError(ValueError):
    """Raised when a document matches no rule under the error policy."""


@dataclass(frozen=True, slots=True)
class PartitionRule:
    pattern: str
    subset: str


@dataclass(frozen=True, slots=True)
class PartitionSpec:
    rules: tuple[PartitionRule, ...]
    default: str = "error"

    def __post_init__(self) -> None:
        if self.default not in UNMATCHED_MODES:
            raise ValueError(f"default must be one of {UNMATCHED_MODES}, got {self.default!r}")

    def subset_for(self, doc_id: str) -> str | None:
        for rule in self.rules:
            if re.search(rule.pattern, doc_id):
                return rule.subset
        return None


_GUM_SPOKEN = ("interview", "conversation", "podcast", "vlog", "court", "speech")
_GUM_WRITTEN = ("news", "academic", "fiction", "whow", "bio", "essay",
                "letter", "textbook", "voyage")

GUM_PARTITION = PartitionSpec(
    rules=tuple(
        [PartitionRule(f"_{genre}_", "spoken") for genre in _GUM_SPOKEN]
        + [PartitionRule(f"_{genre}_", "written") for genre in _GUM_WRITTEN]
    ),
    default="error",
)

PRESETS = {"gum": GUM_PARTITION}


def load_partition_spec(source: str | Path | TextIO, default: str = "error") -> PartitionSpec:
    """Read "pattern<TAB>subset" lines; '#' comments and blanks are skipped."""
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
    rules: list[PartitionRule] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip()
        if not line or line.startswith("#"):
            continue
        if "\t" not in line:
            raise ValueError(f"line {lineno}: expected pattern<TAB>subset, got {raw!r}")
        pattern, subset = line.split("\t", 1)
        subset = subset.strip()
        if not pattern or not subset:
            raise ValueError(f"line {lineno}: empty pattern or subset name")
        try:
            re.compile(pattern)
        except re.error as exc:
            raise ValueError(f"line {lineno}: bad pattern {pattern!r}: {exc}") from exc
        rules.append(PartitionRule(pattern, subset))
    return PartitionSpec(tuple(rules), default=default)


def partition_treebank(treebank: Treebank, spec: PartitionSpec) -> dict[str, Treebank]:
    """Assign every document to one subset; documents are never split.

    Subset treebanks are named "<corpus_id>-<subset>" and keep documents in
    their original order, so partitioning then concatenating the subsets
    preserves all sentences.
    """
    buckets: dict[str, list[tuple[str, list]]] = {}
    for doc_id, sents in treebank.documents:
        subset = spec.subset_for(doc_id)
        if subset is None:
            if spec.default == "error":
                raise PartitionError(f"document {doc_id!r} matches no partition rule")
            subset = UNASSIGNED_SUBSET
        buckets.setdefault(subset, []).append((doc_id, sents))
    return {
        subset: Treebank.from_documents(f"{treebank.corpus_id}-{subset}", docs)
        for subset, docs in buckets.items()
    }
