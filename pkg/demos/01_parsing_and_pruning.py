"""
Parsing CoNLL-U and pruning branches
====================================

Walks through the first half of the pipeline: read a treebank, inspect the
validated sentences, and build structurally normalized versions by deleting
every branch rooted in a punctuation, self-repair or discourse token.
"""

from syntrees import (
    DISFLUENCY_FREE,
    PUNCT_FREE,
    normalize_treebank,
    parse_treebank,
    to_conllu,
)

# A two-sentence corpus: one written sentence and one spoken utterance with a
# filler ("Yeah") and a restart ("this is - this is").  In the annotation the
# abandoned "this is" hangs off the repaired "this" via the reparandum
# relation, and the filler attaches to the root via discourse.
CORPUS = """\
# newdoc id = demo_written_1
# sent_id = w1
# text = She stayed while I lit the fire.
1	She	she	PRON	_	_	2	nsubj	_	_
2	stayed	stay	VERB	_	_	0	root	_	_
3	while	while	SCONJ	_	_	5	mark	_	_
4	I	I	PRON	_	_	5	nsubj	_	_
5	lit	light	VERB	_	_	2	advcl	_	_
6	the	the	DET	_	_	7	det	_	_
7	fire	fire	NOUN	_	_	5	obj	_	_
8	.	.	PUNCT	_	_	2	punct	_	_

# newdoc id = demo_spoken_1
# sent_id = s1
# text = Yeah this is – this is great.
1	Yeah	yeah	INTJ	_	_	7	discourse	_	_
2	this	this	PRON	_	_	5	reparandum	_	_
3	is	be	AUX	_	_	2	cop	_	_
4	–	–	PUNCT	_	_	7	punct	_	_
5	this	this	PRON	_	_	7	nsubj	_	_
6	is	be	AUX	_	_	7	cop	_	_
7	great	great	ADJ	_	_	0	root	_	_
8	.	.	PUNCT	_	_	7	punct	_	_

"""

# Parsing validates every sentence: exactly one root, heads in range, no
# cycles, consecutive ids.  Unknown labels would show up as warnings in
# result.diagnostics; structural problems raise (or, with strict=False, skip
# the sentence and report it).
result = parse_treebank(CORPUS, corpus_id="demo")
treebank = result.treebank
print(f"{treebank.num_documents} documents, {treebank.num_sentences} sentences, "
      f"{treebank.word_total} words, {len(result.diagnostics)} diagnostics")

for sentence in treebank.sentences():
    root = sentence.tokens[sentence.root_id - 1]
    print(f"  {sentence.sent_id}: root = {root.form!r} ({root.upos})")

# The punctuation-free version is the usual basis for cross-corpus work:
# transcribed speech has no real punctuation, so keeping it in the written
# corpus would skew every comparison.
nopunct, stats = normalize_treebank(treebank, PUNCT_FREE)
print(f"\npunct-free: {stats.words_before} -> {stats.words_after} words, "
      f"removed {stats.tokens_removed_by_label}")

# The disfluency-free version additionally removes self-repairs and
# discourse elements, isolating the core syntax of the utterances.
core, stats = normalize_treebank(treebank, DISFLUENCY_FREE)
print(f"disfluency-free: {stats.words_before} -> {stats.words_after} words, "
      f"removed {stats.tokens_removed_by_label}")

# Survivors are renumbered 1..n with heads rewritten, so the output is again
# a valid treebank and round-trips through the writer.
print("\ndisfluency-free corpus:")
print(to_conllu(core))
