"""Delexicalized (sub)tree enumeration and canonical string rendering.

Every token in a sentence roots exactly one structure: the token itself plus
all of its direct and indirect dependents.  A structure is rendered as a
deterministic one-line string in which "<" and ">" mimic dependency arrows:

    DET <det NOUN                 the noun is modified by a determiner
    VERB >obj NOUN                the verb governs a noun object
    ADP <case DET <det NOUN       two left dependents in surface order
    VERB >obj (DET <det NOUN)     parentheses wrap dependents that bring
                                  dependents of their own

With word order treated as distinctive (the default), left and right
dependents are emitted on their side of the head in surface order, so a
premodifying "ADJ <amod NOUN" and a postmodifying "NOUN >amod ADJ" are
different structures.  The relation by which a structure's own root is
attached to the rest of its sentence is never part of the structure.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence, TextIO

from .conllu import Sentence, Token

NODE_TYPES = ("upos", "xpos", "form", "lemma", "deprel", "none")

EXTRACTION_KEYS = ("node_type", "labeled", "label_subtypes", "fixed")

_BOOL_VALUES = {"yes": True, "no": False}


class ConfigError(ValueError):
    """Raised for unknown configuration keys or unusable values."""


@dataclass(frozen=True, slots=True)
class ExtractionConfig:
    """How tree nodes are labeled and ordered in canonical strings.

    The defaults (part-of-speech nodes, labeled arcs, subtypes collapsed,
    word order distinctive) are the configuration used for every built-in
    reference statistic.
    """

    node_type: str = "upos"
    labeled: bool = True
    label_subtypes: bool = False
    fixed: bool = True

    def __post_init__(self) -> None:
        if self.node_type not in NODE_TYPES:
            raise ConfigError(
                f"node_type must be one of {', '.join(NODE_TYPES)}, got {self.node_type!r}")

    def describe(self) -> str:
        yn = {True: "yes", False: "no"}
        return (f"node_type={self.node_type} labeled={yn[self.labeled]} "
                f"label_subtypes={yn[self.label_subtypes]} fixed={yn[self.fixed]}")

    @classmethod
    def from_description(cls, text: str) -> "ExtractionConfig":
        """Inverse of :meth:`describe` (used by inventory file headers)."""
        items: dict[str, tuple[int, str]] = {}
        for part in text.split():
            if "=" not in part:
                raise ConfigError(f"malformed config description part {part!r}")
            key, value = part.split("=", 1)
            if key not in EXTRACTION_KEYS:
                raise ConfigError(f"unknown config key {key!r}")
            items[key] = (0, value)
        return extraction_config_from_items(items)


DEFAULT_CONFIG = ExtractionConfig()


def read_config_items(text: str, allowed: Sequence[str]) -> dict[str, tuple[int, str]]:
    """Parse key=value lines into {key: (line_number, value)}.

    Blank lines and '#' comments are ignored; a later assignment to the same
    key overrides an earlier one.  Keys outside ``allowed`` are rejected,
    naming the offending line.
    """
    items: dict[str, tuple[int, str]] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        key = key.strip()
        if key not in allowed:
            raise ConfigError(f"line {lineno}: unknown config key {key!r}")
        items[key] = (lineno, value.strip())
    return items


def config_bool(key: str, lineno: int, value: str) -> bool:
    if value not in _BOOL_VALUES:
        raise ConfigError(f"line {lineno}: {key} must be yes or no, got {value!r}")
    return _BOOL_VALUES[value]


def extraction_config_from_items(items: Mapping[str, tuple[int, str]]) -> ExtractionConfig:
    kwargs: dict[str, object] = {}
    for key, (lineno, value) in items.items():
        if key == "node_type":
            if value not in NODE_TYPES:
                raise ConfigError(
                    f"line {lineno}: node_type must be one of {', '.join(NODE_TYPES)}, "
                    f"got {value!r}")
            kwargs[key] = value
        else:
            kwargs[key] = config_bool(key, lineno, value)
    return ExtractionConfig(**kwargs)


def load_extraction_config(source: str | Path | TextIO) -> ExtractionConfig:
    """Read an extraction configuration file (key=value lines).

    Exactly the keys node_type, labeled, label_subtypes and fixed are
    accepted; boolean values are spelled yes/no.  Missing keys keep their
    defaults.
    """
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
    return extraction_config_from_items(read_config_items(text, EXTRACTION_KEYS))


@dataclass(frozen=True, slots=True)
class CanonicalTree:
    """A rendered structure: its text, node count and root symbol."""

    text: str
    node_count: int
    head_symbol: str


def _node_symbol(tok: Token, cfg: ExtractionConfig) -> str:
    nt = cfg.node_type
    if nt == "upos":
        return tok.upos
    if nt == "xpos":
        return tok.xpos if tok.xpos is not None else "_"
    if nt == "form":
        return tok.form
    if nt == "lemma":
        return tok.lemma
    if nt == "deprel":
        return tok.deprel if cfg.label_subtypes else tok.core_deprel
    return "_"


def _serialize_under(
    tokens: list[Token],
    kids: list[list[int]],
    cfg: ExtractionConfig,
    top: int,
) -> tuple[list[str], list[int]]:
    """Render every node in the subtree rooted at ``top``, bottom-up.

    Returns (text, node_count) arrays indexed by token id; ids outside the
    subtree stay empty.  Iterative so that chain-shaped sentences of any
    length cannot exhaust the recursion limit.
    """
    n = len(tokens)
    text = [""] * (n + 1)
    wrapped = [""] * (n + 1)
    count = [0] * (n + 1)

    order = [top]
    i = 0
    while i < len(order):
        order.extend(kids[order[i]])
        i += 1

    labeled = cfg.labeled
    subtypes = cfg.label_subtypes
    for node in reversed(order):
        ks = kids[node]
        sym = _node_symbol(tokens[node - 1], cfg)
        if not ks:
            text[node] = sym
            wrapped[node] = sym
            count[node] = 1
            continue
        parts: list[str] = []
        if cfg.fixed:
            split = bisect_left(ks, node)
            for d in ks[:split]:
                parts.append(wrapped[d])
                if labeled:
                    dep = tokens[d - 1]
                    parts.append("<" + (dep.deprel if subtypes else dep.core_deprel))
                else:
                    parts.append("<")
            parts.append(sym)
            for d in ks[split:]:
                if labeled:
                    dep = tokens[d - 1]
                    parts.append(">" + (dep.deprel if subtypes else dep.core_deprel))
                else:
                    parts.append(">")
                parts.append(wrapped[d])
        else:
            deps = []
            for d in ks:
                dep = tokens[d - 1]
                label = (dep.deprel if subtypes else dep.core_deprel) if labeled else ""
                deps.append((label, wrapped[d]))
            parts.append(sym)
            for label, rendered in sorted(deps):
                parts.append(">" + label)
                parts.append(rendered)
        node_text = " ".join(parts)
        text[node] = node_text
        wrapped[node] = "(" + node_text + ")"
        count[node] = 1 + sum(count[d] for d in ks)
    return text, count


def serialize_subtree(
    sentence: Sentence,
    root: int,
    cfg: ExtractionConfig = DEFAULT_CONFIG,
) -> CanonicalTree:
    """Render the structure rooted at token id ``root``."""
    n = len(sentence.tokens)
    if not 1 <= root <= n:
        raise ValueError(f"token id {root} not in sentence (1..{n})")
    kids = sentence.children()
    text, count = _serialize_under(sentence.tokens, kids, cfg, root)
    return CanonicalTree(text[root], count[root],
                         _node_symbol(sentence.tokens[root - 1], cfg))


def extract_sentence(
    sentence: Sentence,
    cfg: ExtractionConfig = DEFAULT_CONFIG,
) -> list[CanonicalTree]:
    """Render the structure rooted at every token, in token order."""
    if not sentence.tokens:
        return []
    kids = sentence.children()
    roots = kids[0]
    if len(roots) != 1:
        raise ValueError(f"sentence {sentence.sent_id!r} does not have exactly one root")
    text, count = _serialize_under(sentence.tokens, kids, cfg, roots[0])
    return [
        CanonicalTree(text[tok.id], count[tok.id], _node_symbol(tok, cfg))
        for tok in sentence.tokens
    ]
