import random
from collections import Counter

from syntrees import (
    DISFLUENCY_FREE,
    PUNCT_FREE,
    PruneSpec,
    extract_sentence,
    normalize_treebank,
    parse_treebank,
    prune_branches,
)
from helpers import make_sentence, make_treebank, oracle_descendants, random_sentence

ALL_SPECS = [
    PruneSpec.of("punct"),
    PruneSpec.of("punct", "discourse"),
    DISFLUENCY_FREE,
    PruneSpec.of("nsubj"),
    PruneSpec.of("root"),
]


def test_punct_free_keeps_restart(fig2_sentence):
    pruned = prune_branches(fig2_sentence, PUNCT_FREE)
    assert [t.form for t in pruned.tokens] == ["Yeah", "this", "is", "this", "is", "great"]
    assert [t.id for t in pruned.tokens] == [1, 2, 3, 4, 5, 6]
    assert [t.head for t in pruned.tokens] == [6, 4, 2, 6, 6, 0]
    assert [t.deprel for t in pruned.tokens] == \
        ["discourse", "reparandum", "cop", "nsubj", "cop", "root"]


def test_disfluency_free_keeps_core_clause(fig2_sentence):
    pruned = prune_branches(fig2_sentence, DISFLUENCY_FREE)
    assert [t.form for t in pruned.tokens] == ["this", "is", "great"]
    assert [t.head for t in pruned.tokens] == [3, 3, 0]
    [tree] = [ct.text for ct in extract_sentence(pruned) if ct.node_count == 3]
    assert tree == "PRON <nsubj AUX <cop ADJ"


def test_punct_free_serialization(fig2_treebank):
    from syntrees import to_conllu
    normalized, _ = normalize_treebank(fig2_treebank, PUNCT_FREE)
    assert to_conllu(normalized) == (
        "# sent_id = spoken-demo-1\n"
        "# text = Yeah this is – this is great .\n"
        "1\tYeah\tyeah\tINTJ\t_\t_\t6\tdiscourse\t_\t_\n"
        "2\tthis\tthis\tPRON\t_\t_\t4\treparandum\t_\t_\n"
        "3\tis\tbe\tAUX\t_\t_\t2\tcop\t_\t_\n"
        "4\tthis\tthis\tPRON\t_\t_\t6\tnsubj\t_\t_\n"
        "5\tis\tbe\tAUX\t_\t_\t6\tcop\t_\t_\n"
        "6\tgreat\tgreat\tADJ\t_\t_\t0\troot\t_\t_\n"
        "\n"
    )


def test_no_match_and_empty_spec_are_identity(fig1_sentence):
    assert prune_branches(fig1_sentence, PruneSpec(frozenset())) is fig1_sentence
    assert prune_branches(fig1_sentence, PruneSpec.of("vocative")) is fig1_sentence


def test_removing_the_root_empties_the_sentence(fig1_sentence):
    assert prune_branches(fig1_sentence, PruneSpec.of("root")) is None


def test_subtypes_are_pruned_by_core_label():
    s = make_sentence([
        ("uh", "INTJ", 2, "discourse:filler"),
        ("go", "VERB", 0, "root"),
    ])
    pruned = prune_branches(s, DISFLUENCY_FREE)
    assert [t.form for t in pruned.tokens] == ["go"]


def test_removed_counts_attribute_to_trigger_label(fig2_sentence):
    counts = Counter()
    prune_branches(fig2_sentence, DISFLUENCY_FREE, counts)
    # "is" inside the restart counts under reparandum, the branch that
    # triggered its removal, not under its own label
    assert counts == {"punct": 2, "discourse": 1, "reparandum": 2}


def test_prune_idempotent_and_descendant_closed():
    rng = random.Random(11)
    for _ in range(300):
        s = random_sentence(rng)
        spec = rng.choice(ALL_SPECS)
        once = prune_branches(s, spec)
        if once is None:
            continue
        again = prune_branches(once, spec)
        assert again is once  # nothing left to remove
        # descendant closure: a survivor's ancestors all survived
        survivors = {t.form for t in once.tokens}
        by_form = {t.form: t for t in s.tokens}
        originals = {t.id: t for t in s.tokens}
        for form in survivors:
            tok = by_form[form]
            while tok.head != 0:
                tok = originals[tok.head]
                assert tok.form in survivors


def test_prune_monotone_in_the_label_set():
    rng = random.Random(13)
    small = PruneSpec.of("punct")
    large = DISFLUENCY_FREE
    for _ in range(200):
        s = random_sentence(rng)
        after_small = prune_branches(s, small)
        after_large = prune_branches(s, large)
        kept_small = {t.form for t in after_small.tokens} if after_small else set()
        kept_large = {t.form for t in after_large.tokens} if after_large else set()
        assert kept_large <= kept_small


def test_pruned_sentences_satisfy_tree_invariants():
    rng = random.Random(17)
    for _ in range(200):
        s = random_sentence(rng)
        spec = rng.choice(ALL_SPECS)
        pruned = prune_branches(s, spec)
        if pruned is None:
            continue
        n = len(pruned.tokens)
        assert [t.id for t in pruned.tokens] == list(range(1, n + 1))
        assert sum(1 for t in pruned.tokens if t.head == 0) == 1
        assert all(0 <= t.head <= n and t.head != t.id for t in pruned.tokens)
        assert oracle_descendants(pruned, pruned.root_id) == set(range(1, n + 1))


def test_normalize_treebank_counts_and_drops(fig1_treebank, fig2_treebank):
    # a root directly labeled punct, so pruning empties the whole sentence
    only_punct = make_sentence([(".", "PUNCT", 0, "punct")])
    tb = make_treebank(
        list(fig1_treebank.sentences()) + list(fig2_treebank.sentences()) + [only_punct])
    normalized, stats = normalize_treebank(tb, PUNCT_FREE)
    assert stats.words_before == 17
    assert stats.words_after == 13
    assert stats.sentences_dropped == 1
    assert stats.tokens_removed_by_label == {"punct": 4}
    assert stats.words_after + sum(stats.tokens_removed_by_label.values()) == stats.words_before
    assert normalized.word_total == 13
    assert normalized.num_sentences == 2


def test_normalize_identity_spec():
    tb = make_treebank([make_sentence([("Hi", "INTJ", 0, "root")])])
    normalized, stats = normalize_treebank(tb, PruneSpec(frozenset()))
    assert normalized.word_total == tb.word_total
    assert stats.sentences_dropped == 0
    assert stats.tokens_removed_by_label == {}


def test_range_passthrough_dropped_only_when_renumbered():
    text = (
        "1-2\tcannot\t_\t_\t_\t_\t_\t_\t_\t_\n"
        "1\tcan\tcan\tAUX\t_\t_\t2\taux\t_\t_\n"
        "2\tstay\tstay\tVERB\t_\t_\t0\troot\t_\t_\n"
        "3\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_\n"
    )
    s = next(parse_treebank(text, "mwt").treebank.sentences())
    pruned = prune_branches(s, PUNCT_FREE)
    # ids 1 and 2 kept their numbers, so the range line survives
    assert pruned.passthrough == [(0, "1-2\tcannot\t_\t_\t_\t_\t_\t_\t_\t_")]

    shifted = (
        "1\tOh\toh\tINTJ\t_\t_\t3\tdiscourse\t_\t_\n"
        "2-3\tcannot\t_\t_\t_\t_\t_\t_\t_\t_\n"
        "2\tcan\tcan\tAUX\t_\t_\t3\taux\t_\t_\n"
        "3\tstay\tstay\tVERB\t_\t_\t0\troot\t_\t_\n"
    )
    s = next(parse_treebank(shifted, "mwt").treebank.sentences())
    pruned = prune_branches(s, DISFLUENCY_FREE)
    # survivors were renumbered, so the stale 2-3 range is dropped
    assert pruned.passthrough == []
