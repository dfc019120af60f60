"""
Enumerating (sub)trees and building inventories
===============================================

Every token roots exactly one structure: the token plus all of its direct
and indirect dependents, rendered delexicalized (part-of-speech tags instead
of word forms) as a deterministic one-line string.  Counting those strings
over a corpus gives its structure inventory.
"""
import io

from syntrees import (
    ExtractionConfig,
    build_inventory,
    extract_sentence,
    parse_treebank,
    serialize_subtree,
    write_inventory,
)

SENTENCE = """\
1	She	she	PRON	_	_	2	nsubj	_	_
2	stayed	stay	VERB	_	_	0	root	_	_
3	while	while	SCONJ	_	_	5	mark	_	_
4	I	I	PRON	_	_	5	nsubj	_	_
5	lit	light	VERB	_	_	2	advcl	_	_
6	the	the	DET	_	_	7	det	_	_
7	fire	fire	NOUN	_	_	5	obj	_	_

"""

treebank = parse_treebank(SENTENCE, corpus_id="demo").treebank
sentence = next(treebank.sentences())

# One structure per token, from single-word trees up to the whole sentence.
# "A <lab B" means A depends on B, "B >lab A" means B governs A, and
# parentheses wrap dependents that bring dependents of their own.
print("the seven structures of the sentence:")
for tok, ct in zip(sentence.tokens, extract_sentence(sentence)):
    print(f"  {tok.form:<8} {ct.text}")

# Word order is structurally distinctive by default: a premodifying
# adjective and a postmodifying one yield different strings.
print("\nsubtree of 'fire':", serialize_subtree(sentence, 7).text)

# The rendering is configurable: drop the labels, keep label subtypes, use
# word forms as nodes, or ignore linear order entirely.
for cfg, note in [
    (ExtractionConfig(labeled=False), "unlabeled"),
    (ExtractionConfig(node_type="form"), "lexicalized"),
    (ExtractionConfig(fixed=False), "order-insensitive"),
]:
    print(f"  {note:<18} {serialize_subtree(sentence, 5, cfg).text}")

# An inventory counts canonical strings across the whole corpus.  Every word
# roots one structure, so structure tokens = corpus words.
inventory = build_inventory(treebank)
print(f"\ninventory: {inventory.type_count} types, {inventory.token_total} tokens")
for text, entry in inventory.sorted_items():
    print(f"  {entry.count}x  {text}")

# Inventories serialize to a deterministic TSV (sorted by descending count,
# ties by text) that the comparison tools read back.
buf = io.StringIO()
write_inventory(inventory, buf)
print("\nTSV form:")
print(buf.getvalue())
