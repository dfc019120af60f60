"""Shared test utilities: fixture tree builders and independent oracles."""
from __future__ import annotations

import random

from syntrees import ExtractionConfig, Sentence, Token, Treebank

UPOS_POOL = ("NOUN", "VERB", "ADJ", "PRON", "ADV", "DET", "ADP", "AUX", "INTJ", "PART")

LABEL_POOL = ("nsubj", "obj", "det", "amod", "advmod", "cc", "cc:preconj",
              "discourse", "discourse:filler", "mark", "case", "cop", "punct",
              "reparandum", "fixed", "nmod")


def make_sentence(rows, sent_id="s1", doc_id="doc"):
    """Build a Sentence from (form, upos, head, deprel) tuples, ids 1..n."""
    tokens = [
        Token(i, form, form.lower(), upos, None, "_", head, deprel, "_", "_")
        for i, (form, upos, head, deprel) in enumerate(rows, start=1)
    ]
    return Sentence(sent_id, doc_id, [], tokens)


def make_treebank(sentences, corpus_id="test", doc_id="doc"):
    return Treebank.from_documents(corpus_id, [(doc_id, list(sentences))])


def random_sentence(rng: random.Random, max_nodes=8,
                    upos_pool=UPOS_POOL, label_pool=LABEL_POOL) -> Sentence:
    """A uniformly random attachment tree; frequently non-projective."""
    n = rng.randint(1, max_nodes)
    root = rng.randint(1, n)
    heads = [0] * (n + 1)
    placed = [root]
    rest = [i for i in range(1, n + 1) if i != root]
    rng.shuffle(rest)
    for i in rest:
        heads[i] = rng.choice(placed)
        placed.append(i)
    rows = []
    for i in range(1, n + 1):
        deprel = "root" if heads[i] == 0 else rng.choice(label_pool)
        rows.append((f"w{i}", rng.choice(upos_pool), heads[i], deprel))
    return make_sentence(rows)


def oracle_descendants(sentence: Sentence, root: int) -> set[int]:
    """Transitive closure of the dependent relation by fixed-point iteration."""
    members = {root}
    changed = True
    while changed:
        changed = False
        for tok in sentence.tokens:
            if tok.head in members and tok.id not in members:
                members.add(tok.id)
                changed = True
    return members


def oracle_serialize(sentence: Sentence, root: int,
                     cfg: ExtractionConfig = ExtractionConfig()) -> tuple[str, int]:
    """Naive recursive rendering, independent of the library implementation.

    Returns (canonical text, node count).  Only suitable for small trees.
    """
    def label(tok: Token) -> str:
        if not cfg.labeled:
            return ""
        return tok.deprel if cfg.label_subtypes else tok.deprel.split(":")[0]

    def symbol(tok: Token) -> str:
        if cfg.node_type == "upos":
            return tok.upos
        if cfg.node_type == "xpos":
            return tok.xpos if tok.xpos is not None else "_"
        if cfg.node_type == "form":
            return tok.form
        if cfg.node_type == "lemma":
            return tok.lemma
        if cfg.node_type == "deprel":
            return tok.deprel if cfg.label_subtypes else tok.deprel.split(":")[0]
        return "_"

    def dependents(i: int) -> list[int]:
        return [t.id for t in sentence.tokens if t.head == i]

    def render(i: int) -> str:
        text = serialize(i)
        return f"({text})" if dependents(i) else text

    def serialize(i: int) -> str:
        tok = sentence.tokens[i - 1]
        deps = dependents(i)
        if cfg.fixed:
            parts = []
            for d in sorted(d for d in deps if d < i):
                parts.append(render(d))
                parts.append("<" + label(sentence.tokens[d - 1]))
            parts.append(symbol(tok))
            for d in sorted(d for d in deps if d > i):
                parts.append(">" + label(sentence.tokens[d - 1]))
                parts.append(render(d))
            return " ".join(parts)
        entries = sorted((label(sentence.tokens[d - 1]), render(d)) for d in deps)
        parts = [symbol(tok)]
        for lab, rend in entries:
            parts.append(">" + lab)
            parts.append(rend)
        return " ".join(parts)

    return serialize(root), len(oracle_descendants(sentence, root))
