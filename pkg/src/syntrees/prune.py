"""Structural normalization: deleting whole branches by dependency label.

A branch is a token whose core relation label matches the prune set,
together with all of its direct and indirect dependents.  Typical uses are
stripping punctuation before cross-corpus comparison, or additionally
stripping self-repairs and discourse elements to isolate the core syntax of
transcribed speech.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace

from .conllu import Sentence, Treebank

_RANGE_SEP = "-"


@dataclass(frozen=True, slots=True)
class PruneSpec:
    """Set of core dependency labels whose branches are deleted.

    Matching is subtype-insensitive: a spec containing "discourse" also
    removes tokens labeled "discourse:filler".
    """

    labels: frozenset[str]

    @classmethod
    def of(cls, *labels: str) -> "PruneSpec":
        return cls(frozenset(labels))


PUNCT_FREE = PruneSpec.of("punct")
DISFLUENCY_FREE = PruneSpec.of("punct", "reparandum", "discourse")
IDENTITY = PruneSpec(frozenset())

PRESETS = {
    "punct-free": PUNCT_FREE,
    "disfluency-free": DISFLUENCY_FREE,
}


@dataclass(slots=True)
class NormalizationStats:
    words_before: int
    words_after: int
    sentences_dropped: int
    tokens_removed_by_label: dict[str, int]


def _keep_passthrough(entry: tuple[int, str], old_to_new: dict[int, int]) -> bool:
    """Keep a raw range/empty-node line only if every id it names is unchanged."""
    _, line = entry
    id_field = line.split("\t", 1)[0]
    if _RANGE_SEP in id_field:
        lo, hi = id_field.split(_RANGE_SEP, 1)
        return all(old_to_new.get(i) == i for i in range(int(lo), int(hi) + 1))
    anchor = int(id_field.split(".", 1)[0])
    return anchor == 0 or old_to_new.get(anchor) == anchor


def prune_branches(
    sentence: Sentence,
    spec: PruneSpec,
    removed_counts: Counter[str] | None = None,
) -> Sentence | None:
    """Delete every branch rooted in a token matching ``spec``.

    Survivors keep their relative order and are renumbered 1..m with heads
    rewritten.  Returns None when the root is removed or nothing survives.
    Each removed token is counted in ``removed_counts`` (when given) under
    the label of the highest matching ancestor that triggered its removal.
    """
    if not spec.labels:
        return sentence
    tokens = sentence.tokens
    n = len(tokens)
    kids = sentence.children()
    removed = [False] * (n + 1)
    stack = list(kids[0])
    while stack:
        i = stack.pop()
        tok = tokens[i - 1]
        if tok.core_deprel in spec.labels:
            branch = [i]
            qi = 0
            while qi < len(branch):
                branch.extend(kids[branch[qi]])
                qi += 1
            for j in branch:
                removed[j] = True
            if removed_counts is not None:
                removed_counts[tok.core_deprel] += len(branch)
        else:
            stack.extend(kids[i])

    survivors = [t for t in tokens if not removed[t.id]]
    if not survivors:
        return None
    if len(survivors) == n:
        return sentence

    old_to_new = {t.id: rank for rank, t in enumerate(survivors, start=1)}
    new_tokens = [
        replace(t, id=old_to_new[t.id], head=0 if t.head == 0 else old_to_new[t.head])
        for t in survivors
    ]
    passthrough = [p for p in sentence.passthrough if _keep_passthrough(p, old_to_new)]
    return Sentence(sentence.sent_id, sentence.doc_id, list(sentence.comments),
                    new_tokens, passthrough)


def normalize_treebank(treebank: Treebank, spec: PruneSpec) -> tuple[Treebank, NormalizationStats]:
    """Apply :func:`prune_branches` to every sentence of a treebank.

    Sentences left empty are dropped (and counted); documents left empty are
    dropped as well.  The word total of the result is recomputed.
    """
    counts: Counter[str] = Counter()
    dropped = 0
    documents: list[tuple[str, list[Sentence]]] = []
    for doc_id, sents in treebank.documents:
        kept: list[Sentence] = []
        for sentence in sents:
            pruned = prune_branches(sentence, spec, counts)
            if pruned is None:
                dropped += 1
            else:
                kept.append(pruned)
        if kept:
            documents.append((doc_id, kept))
    result = Treebank.from_documents(treebank.corpus_id, documents)
    stats = NormalizationStats(
        words_before=treebank.word_total,
        words_after=result.word_total,
        sentences_dropped=dropped,
        tokens_removed_by_label=dict(counts),
    )
    return result, stats
