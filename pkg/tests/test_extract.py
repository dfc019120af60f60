import random

import pytest

from syntrees import (
    ConfigError,
    ExtractionConfig,
    PUNCT_FREE,
    extract_sentence,
    load_extraction_config,
    prune_branches,
    serialize_subtree,
)
from helpers import make_sentence, oracle_serialize, random_sentence

# (rows, root id, expected text) for strings that must come out byte-exact
GOLDEN_SUBTREES = [
    ([("the", "DET", 2, "det"), ("fire", "NOUN", 0, "root")],
     2, "DET <det NOUN"),
    ([("with", "ADP", 3, "case"), ("a", "DET", 3, "det"), ("car", "NOUN", 0, "root")],
     3, "ADP <case DET <det NOUN"),
    ([("ali", "CCONJ", 3, "cc"), ("pa", "CCONJ", 1, "fixed"), ("slani", "ADJ", 0, "root")],
     3, "(CCONJ >fixed CCONJ) <cc ADJ"),
    ([("the", "DET", 3, "det"), ("first", "ADJ", 3, "amod"), ("part", "NOUN", 0, "root"),
      ("of", "ADP", 5, "case"), ("it", "PRON", 3, "nmod")],
     3, "DET <det ADJ <amod NOUN >nmod (ADP <case PRON)"),
    ([("I", "PRON", 2, "nsubj"), ("forgot", "VERB", 0, "root"), ("to", "PART", 4, "mark"),
      ("plant", "VERB", 2, "xcomp"), ("it", "PRON", 4, "obj")],
     2, "PRON <nsubj VERB >xcomp (PART <mark VERB >obj PRON)"),
]


def _count_symbols(text):
    return sum(1 for part in text.replace("(", "").replace(")", "").split()
               if not part.startswith("<") and not part.startswith(">"))


@pytest.mark.parametrize("rows,root,expected", GOLDEN_SUBTREES)
def test_golden_canonical_strings(rows, root, expected):
    ct = serialize_subtree(make_sentence(rows), root)
    assert ct.text == expected
    assert ct.node_count == _count_symbols(expected)
    assert expected.count("(") == expected.count(")")


def test_example_sentence_structures(fig1_sentence):
    nopunct = prune_branches(fig1_sentence, PUNCT_FREE)
    trees = extract_sentence(nopunct)
    assert len(trees) == len(nopunct.tokens) == 7
    assert [ct.text for ct in trees] == [
        "PRON",
        "PRON <nsubj VERB >advcl (SCONJ <mark PRON <nsubj VERB >obj (DET <det NOUN))",
        "SCONJ",
        "PRON",
        "SCONJ <mark PRON <nsubj VERB >obj (DET <det NOUN)",
        "DET",
        "DET <det NOUN",
    ]
    assert [ct.node_count for ct in trees] == [1, 7, 1, 1, 5, 1, 2]
    assert [ct.head_symbol for ct in trees] == \
        ["PRON", "VERB", "SCONJ", "PRON", "VERB", "DET", "NOUN"]
    # the full-sentence structure spans every token
    assert trees[nopunct.root_id - 1].node_count == len(nopunct.tokens)


def test_single_token_sentence():
    s = make_sentence([("Wow", "INTJ", 0, "root")])
    assert [ct.text for ct in extract_sentence(s)] == ["INTJ"]


def test_incoming_relation_never_encoded(fig1_sentence):
    nopunct = prune_branches(fig1_sentence, PUNCT_FREE)
    fire = serialize_subtree(nopunct, 7)
    assert fire.text == "DET <det NOUN"
    assert "obj" not in fire.text
    she = serialize_subtree(nopunct, 1)
    assert she.text == "PRON"


def test_word_order_is_distinctive():
    pre = make_sentence([("beautiful", "ADJ", 2, "amod"), ("day", "NOUN", 0, "root")])
    post = make_sentence([("court", "NOUN", 0, "root"), ("martial", "ADJ", 1, "amod")])
    assert serialize_subtree(pre, 2).text == "ADJ <amod NOUN"
    assert serialize_subtree(post, 1).text == "NOUN >amod ADJ"


def test_unlabeled_rendering():
    cfg = ExtractionConfig(labeled=False)
    s = make_sentence([("the", "DET", 2, "det"), ("fire", "NOUN", 0, "root")])
    assert serialize_subtree(s, 2, cfg).text == "DET < NOUN"
    rows = [("I", "PRON", 2, "nsubj"), ("read", "VERB", 0, "root"),
            ("news", "NOUN", 2, "obj")]
    assert serialize_subtree(make_sentence(rows), 2, cfg).text == "PRON < VERB > NOUN"


def test_label_subtypes_flag():
    rows = [("or", "CCONJ", 2, "cc:preconj"), ("both", "CCONJ", 0, "root")]
    collapsed = serialize_subtree(make_sentence(rows), 2)
    assert collapsed.text == "CCONJ <cc CCONJ"
    verbatim = serialize_subtree(make_sentence(rows), 2, ExtractionConfig(label_subtypes=True))
    assert verbatim.text == "CCONJ <cc:preconj CCONJ"


def test_node_type_variants():
    rows = [("the", "DET", 2, "det"), ("fire", "NOUN", 0, "root")]
    s = make_sentence(rows)
    assert serialize_subtree(s, 2, ExtractionConfig(node_type="form")).text == "the <det fire"
    assert serialize_subtree(s, 2, ExtractionConfig(node_type="lemma")).text == "the <det fire"
    assert serialize_subtree(s, 2, ExtractionConfig(node_type="none")).text == "_ <det _"
    assert serialize_subtree(s, 2, ExtractionConfig(node_type="xpos")).text == "_ <det _"
    assert serialize_subtree(s, 2, ExtractionConfig(node_type="deprel")).text == "det <det root"


def test_free_order_rendering_sorts_by_label_then_text():
    rows = [("the", "DET", 3, "det"), ("big", "ADJ", 3, "amod"), ("dog", "NOUN", 0, "root")]
    cfg = ExtractionConfig(fixed=False)
    assert serialize_subtree(make_sentence(rows), 3, cfg).text == "NOUN >amod ADJ >det DET"
    # premodifier and postmodifier collapse once order is not distinctive
    pre = make_sentence([("beautiful", "ADJ", 2, "amod"), ("day", "NOUN", 0, "root")])
    post = make_sentence([("court", "NOUN", 0, "root"), ("martial", "ADJ", 1, "amod")])
    assert serialize_subtree(pre, 2, cfg).text == serialize_subtree(post, 1, cfg).text


def test_determinism_same_shape_same_text():
    a = make_sentence([("a", "DET", 2, "det"), ("cat", "NOUN", 0, "root")])
    b = make_sentence([("the", "DET", 2, "det"), ("dog", "NOUN", 0, "root")])
    assert serialize_subtree(a, 2).text == serialize_subtree(b, 2).text


def test_non_projective_attachment_uses_surface_order():
    # 2 depends on 4 although 3 heads the sentence: a crossing arc
    rows = [("a", "NOUN", 3, "nmod"), ("b", "NOUN", 4, "nmod"),
            ("c", "VERB", 0, "root"), ("d", "NOUN", 3, "obj")]
    s = make_sentence(rows)
    assert serialize_subtree(s, 4).text == "NOUN <nmod NOUN"
    assert serialize_subtree(s, 3).text == "NOUN <nmod VERB >obj (NOUN <nmod NOUN)"


def test_root_id_out_of_range():
    s = make_sentence([("Hi", "INTJ", 0, "root")])
    with pytest.raises(ValueError):
        serialize_subtree(s, 2)


def test_extractor_matches_brute_force_oracle():
    rng = random.Random(42)
    configs = [
        ExtractionConfig(),
        ExtractionConfig(labeled=False),
        ExtractionConfig(label_subtypes=True),
        ExtractionConfig(fixed=False),
        ExtractionConfig(node_type="form", labeled=False, fixed=False),
    ]
    for _ in range(400):
        s = random_sentence(rng)
        cfg = rng.choice(configs)
        trees = extract_sentence(s, cfg)
        assert len(trees) == len(s.tokens)
        for tok, ct in zip(s.tokens, trees):
            text, count = oracle_serialize(s, tok.id, cfg)
            assert ct.text == text
            assert ct.node_count == count
            assert ct.text.count("(") == ct.text.count(")")
            if cfg.node_type == "upos":
                assert ct.node_count == _count_symbols(ct.text)


def test_load_extraction_config():
    cfg = load_extraction_config(
        "node_type = upos\nlabeled = yes\nlabel_subtypes = no\nfixed = yes\n")
    assert cfg == ExtractionConfig()
    cfg = load_extraction_config("# comment\n\nfixed = no\n")
    assert cfg == ExtractionConfig(fixed=False)


def test_config_errors_carry_line_numbers():
    with pytest.raises(ConfigError, match="line 2"):
        load_extraction_config("fixed = yes\nnode_typ = upos\n")
    with pytest.raises(ConfigError, match="line 1"):
        load_extraction_config("labeled = maybe\n")
    with pytest.raises(ConfigError, match="line 3"):
        load_extraction_config("fixed = yes\n\nnode_type = words\n")


def test_config_describe_round_trip():
    cfg = ExtractionConfig(node_type="deprel", labeled=False, label_subtypes=True, fixed=False)
    assert ExtractionConfig.from_description(cfg.describe()) == cfg
