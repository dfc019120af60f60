"""Reading, validating and writing CoNLL-U dependency treebanks.

A treebank is an ordered list of documents, each an ordered list of
sentences.  Every sentence is a single-rooted dependency tree over syntactic
words with consecutive ids 1..n.  Multiword range lines ("3-4") and empty
node lines ("5.1") never become tokens: they are kept verbatim, together
with their position in the token stream, so that unmodified sentences can be
re-emitted as they were read.

Parsed treebanks are not mutated by any function in this package; they can
safely be shared across threads.
"""
from __future__ import annotations

import io
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, TextIO

# The 17 universal part-of-speech tags.
UPOS_TAGS = frozenset({
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
})

# The 37 universal dependency relations (core labels, without subtypes).
UNIVERSAL_DEPRELS = frozenset({
    "acl", "advcl", "advmod", "amod", "appos", "aux", "case", "cc", "ccomp",
    "clf", "compound", "conj", "cop", "csubj", "dep", "det", "discourse",
    "dislocated", "expl", "fixed", "flat", "goeswith", "iobj", "list",
    "mark", "nmod", "nsubj", "nummod", "obj", "obl", "orphan", "parataxis",
    "punct", "reparandum", "root", "vocative", "xcomp",
})

_WORD_ID = re.compile(r"^\d+$")
_RANGE_ID = re.compile(r"^(\d+)-(\d+)$")
_EMPTY_ID = re.compile(r"^(\d+)\.\d+$")
_NEWDOC = re.compile(r"^#\s*newdoc(?:\s+id\s*=\s*(.+?))?\s*$")
_SENT_ID = re.compile(r"^#\s*sent_id\s*=\s*(.+?)\s*$")


class ParseError(ValueError):
    """Raised in strict mode when the input fails structural validation."""


@dataclass(frozen=True, slots=True)
class Token:
    """One syntactic word, i.e. a single 10-column CoNLL-U row."""

    id: int
    form: str
    lemma: str
    upos: str
    xpos: str | None
    feats: str
    head: int
    deprel: str
    deps: str
    misc: str

    @property
    def core_deprel(self) -> str:
        """Relation label with any ':'-separated subtype stripped."""
        return self.deprel.split(":", 1)[0]

    def to_line(self) -> str:
        return "\t".join((
            str(self.id), self.form, self.lemma, self.upos,
            self.xpos if self.xpos is not None else "_",
            self.feats, str(self.head), self.deprel, self.deps, self.misc,
        ))


@dataclass(slots=True)
class Diagnostic:
    """A validation finding tied to an input line number."""

    line: int
    message: str
    severity: str = "error"  # "error" or "warning"

    def __str__(self) -> str:
        return f"line {self.line}: {self.severity}: {self.message}"


@dataclass(slots=True)
class Sentence:
    """A single-rooted dependency tree plus its raw non-word lines."""

    sent_id: str
    doc_id: str
    comments: list[str]
    tokens: list[Token]
    # (number of word lines preceding the line, raw line) for multiword
    # ranges and empty nodes
    passthrough: list[tuple[int, str]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.tokens)

    def children(self) -> list[list[int]]:
        """Dependent ids per head id, ascending; index 0 holds the root."""
        kids: list[list[int]] = [[] for _ in range(len(self.tokens) + 1)]
        for tok in self.tokens:
            kids[tok.head].append(tok.id)
        return kids

    @property
    def root_id(self) -> int:
        for tok in self.tokens:
            if tok.head == 0:
                return tok.id
        raise ValueError(f"sentence {self.sent_id!r} has no root token")


@dataclass(slots=True)
class Treebank:
    """An ordered collection of documents of parsed sentences."""

    corpus_id: str
    documents: list[tuple[str, list[Sentence]]]
    word_total: int

    @classmethod
    def from_documents(
        cls, corpus_id: str, documents: Iterable[tuple[str, list[Sentence]]]
    ) -> "Treebank":
        docs = [(doc_id, list(sents)) for doc_id, sents in documents]
        total = sum(len(s.tokens) for _, sents in docs for s in sents)
        return cls(corpus_id, docs, total)

    def sentences(self) -> Iterator[Sentence]:
        for _, sents in self.documents:
            yield from sents

    @property
    def num_documents(self) -> int:
        return len(self.documents)

    @property
    def num_sentences(self) -> int:
        return sum(len(sents) for _, sents in self.documents)


@dataclass(slots=True)
class ParseResult:
    treebank: Treebank
    diagnostics: list[Diagnostic]
    sentences_skipped: int

    def errors(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.severity == "error"]

    def warnings(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.severity == "warning"]


def _iter_lines(source: str | TextIO | Iterable[str]) -> Iterator[str]:
    if isinstance(source, str):
        yield from source.split("\n")
    else:
        for line in source:
            yield line.rstrip("\n")


def _validate_tree(tokens: list[Token], token_lines: list[int]) -> list[Diagnostic]:
    """Structural checks: single root, heads in range, no self-loops, no cycles."""
    errs: list[Diagnostic] = []
    n = len(tokens)
    for t in tokens:
        if t.head > n:
            errs.append(Diagnostic(
                token_lines[t.id - 1],
                f"head {t.head} out of range (sentence has {n} tokens)",
            ))
        elif t.head == t.id:
            errs.append(Diagnostic(token_lines[t.id - 1], f"token {t.id} is its own head"))
    if errs:
        return errs
    roots = [t for t in tokens if t.head == 0]
    if not roots:
        errs.append(Diagnostic(token_lines[0], "no root token (head 0)"))
    elif len(roots) > 1:
        second = roots[1]
        errs.append(Diagnostic(
            token_lines[second.id - 1],
            f"multiple root tokens (ids {roots[0].id} and {second.id})",
        ))
    if errs:
        return errs
    # With one root and every head in range, the tree property reduces to
    # every parent chain terminating at 0 without revisiting a node.
    state = [0] * (n + 1)  # 0 unseen, 1 on current path, 2 cleared
    state[0] = 2
    for start in range(1, n + 1):
        path = []
        node = start
        while state[node] == 0:
            state[node] = 1
            path.append(node)
            node = tokens[node - 1].head
        on_cycle = state[node] == 1
        for p in path:
            state[p] = 2
        if on_cycle:
            errs.append(Diagnostic(token_lines[node - 1], f"dependency cycle through token {node}"))
            break
    return errs


def parse_treebank(
    source: str | TextIO | Iterable[str],
    corpus_id: str = "corpus",
    strict: bool = True,
) -> ParseResult:
    """Parse CoNLL-U text into a validated treebank.

    ``source`` may be a string, an open text file, or any iterable of lines.
    Document boundaries come from "# newdoc id = ..." comments; without any,
    the whole input is a single document named after ``corpus_id``.

    Structural problems (bad field counts, unparseable heads, heads out of
    range, cycles, zero or multiple roots) raise :class:`ParseError` in
    strict mode; in lenient mode the offending sentence is skipped and the
    problem is recorded in the diagnostics.  UPOS tags or relation labels
    outside the universal vocabularies only ever produce warnings, reported
    once per distinct value.
    """
    documents: list[tuple[str, list[Sentence]]] = []
    diagnostics: list[Diagnostic] = []
    warned: set[tuple[str, str]] = set()
    skipped = 0
    bare_newdoc = 0

    comments: list[str] = []
    tokens: list[Token] = []
    token_lines: list[int] = []
    passthrough: list[tuple[int, str]] = []
    block_errors: list[Diagnostic] = []
    block_start = 0

    def warn(lineno: int, kind: str, value: str, message: str) -> None:
        if (kind, value) not in warned:
            warned.add((kind, value))
            diagnostics.append(Diagnostic(lineno, message, "warning"))

    def fail(diag: Diagnostic) -> None:
        if strict:
            raise ParseError(str(diag))
        block_errors.append(diag)

    def finish_block() -> None:
        nonlocal skipped, bare_newdoc
        if not (comments or tokens or passthrough or block_errors):
            return
        newdoc_id: str | None = None
        has_newdoc = False
        sent_id = ""
        for c in comments:
            m = _NEWDOC.match(c)
            if m:
                has_newdoc = True
                if m.group(1):
                    newdoc_id = m.group(1)
                continue
            m = _SENT_ID.match(c)
            if m:
                sent_id = m.group(1)
        if has_newdoc and newdoc_id is None:
            bare_newdoc += 1
            newdoc_id = f"{corpus_id}#newdoc{bare_newdoc}"
        errs = list(block_errors)
        if not errs:
            if not tokens:
                errs.append(Diagnostic(block_start, "sentence block contains no word lines"))
            else:
                errs.extend(_validate_tree(tokens, token_lines))
        if errs:
            if strict:
                raise ParseError(str(errs[0]))
            diagnostics.extend(errs)
            skipped += 1
        if has_newdoc or not documents:
            documents.append((newdoc_id if has_newdoc else corpus_id, []))
        if not errs:
            sentence = Sentence(sent_id, documents[-1][0], list(comments),
                                list(tokens), list(passthrough))
            documents[-1][1].append(sentence)
        comments.clear()
        tokens.clear()
        token_lines.clear()
        passthrough.clear()
        block_errors.clear()

    lineno = 0
    for raw in _iter_lines(source):
        lineno += 1
        line = raw.rstrip("\r")
        if not line:
            finish_block()
            continue
        if not (comments or tokens or passthrough or block_errors):
            block_start = lineno
        if line.startswith("#"):
            comments.append(line)
            continue
        fields = line.split("\t")
        if len(fields) != 10:
            fail(Diagnostic(lineno, f"expected 10 tab-separated fields, got {len(fields)}"))
            continue
        id_field = fields[0]
        if _WORD_ID.match(id_field):
            tid = int(id_field)
            if tid != len(tokens) + 1:
                fail(Diagnostic(lineno, f"token id {tid} out of sequence (expected {len(tokens) + 1})"))
                continue
            try:
                head = int(fields[6])
            except ValueError:
                fail(Diagnostic(lineno, f"head is not an integer: {fields[6]!r}"))
                continue
            if head < 0:
                fail(Diagnostic(lineno, f"negative head: {head}"))
                continue
            upos = fields[3]
            deprel = fields[7]
            if upos not in UPOS_TAGS:
                warn(lineno, "upos", upos, f"UPOS {upos!r} outside the universal tag set")
            core = deprel.split(":", 1)[0]
            if core not in UNIVERSAL_DEPRELS:
                warn(lineno, "deprel", core, f"relation {core!r} outside the universal label set")
            tokens.append(Token(
                tid, fields[1], fields[2], upos,
                None if fields[4] == "_" else fields[4],
                fields[5], head, deprel, fields[8], fields[9],
            ))
            token_lines.append(lineno)
        elif _RANGE_ID.match(id_field):
            m = _RANGE_ID.match(id_field)
            a, b = int(m.group(1)), int(m.group(2))
            if a > b:
                fail(Diagnostic(lineno, f"decreasing multiword range {id_field}"))
                continue
            passthrough.append((len(tokens), line))
        elif _EMPTY_ID.match(id_field):
            passthrough.append((len(tokens), line))
        else:
            fail(Diagnostic(lineno, f"unrecognized token id {id_field!r}"))
    finish_block()

    documents = [(doc_id, sents) for doc_id, sents in documents if sents]
    word_total = sum(len(s.tokens) for _, sents in documents for s in sents)
    return ParseResult(Treebank(corpus_id, documents, word_total), diagnostics, skipped)


def parse_file(path: str | Path, corpus_id: str | None = None, strict: bool = True) -> ParseResult:
    """Parse one CoNLL-U file; ``corpus_id`` defaults to the file stem."""
    path = Path(path)
    if corpus_id is None:
        corpus_id = path.stem
    with open(path, encoding="utf-8") as f:
        return parse_treebank(f, corpus_id, strict=strict)


def _passthrough_valid(entry: tuple[int, str], n: int) -> bool:
    """A stored raw line is re-emitted only if its ids still exist."""
    _, line = entry
    id_field = line.split("\t", 1)[0]
    m = _RANGE_ID.match(id_field)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        return 1 <= a <= b <= n
    m = _EMPTY_ID.match(id_field)
    if m:
        return 0 <= int(m.group(1)) <= n
    return False


def _write_sentence(sentence: Sentence, out: TextIO) -> None:
    for c in sentence.comments:
        out.write(c + "\n")
    n = len(sentence.tokens)
    pending = [p for p in sentence.passthrough if _passthrough_valid(p, n)]
    k = 0
    for idx, tok in enumerate(sentence.tokens):
        while k < len(pending) and pending[k][0] <= idx:
            out.write(pending[k][1] + "\n")
            k += 1
        out.write(tok.to_line() + "\n")
    while k < len(pending):
        out.write(pending[k][1] + "\n")
        k += 1
    out.write("\n")


def write_treebank(treebank: Treebank, out: TextIO) -> None:
    """Serialize to CoNLL-U so that a re-parse reproduces the treebank.

    A "# newdoc id" line is synthesized for documents that lost theirs
    (e.g. after pruning dropped the document's first sentence), whenever the
    document structure could not be recovered from the output otherwise.
    """
    explicit_docs = len(treebank.documents) > 1
    for doc_id, sents in treebank.documents:
        first = True
        for sentence in sents:
            if first and (explicit_docs or doc_id != treebank.corpus_id) \
                    and not any(_NEWDOC.match(c) for c in sentence.comments):
                out.write(f"# newdoc id = {doc_id}\n")
            first = False
            _write_sentence(sentence, out)


def to_conllu(treebank: Treebank) -> str:
    buf = io.StringIO()
    write_treebank(treebank, buf)
    return buf.getvalue()


def write_file(treebank: Treebank, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        write_treebank(treebank, f)
