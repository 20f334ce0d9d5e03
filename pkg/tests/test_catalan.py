import itertools

import pytest

from conftest import oracle_homset, trees_up_to
from treecat import (
    POINT,
    CatalanDecodeError,
    CatalanWord,
    Category,
    OrderEmbedding,
    Ordering,
    build_Bn,
    compare,
    compose,
    decode,
    encode,
    enumerate_morphisms,
    identity,
    parse_brackets,
    parse_word,
)
from treecat.catalan import LabelConflictError, edge_labels

P = parse_brackets

# Figure transcription: domain root with a chain and a leaf (chain drawn
# first in the left-to-right walk); codomain read off the word's top row.
PAPER_F = OrderEmbedding(P("(())()"), P("((((()()))())((()()())))"), (0, 2, 4, 8))
PAPER_GLYPHS = "↑0↑0↑1↑1↑↓↑↓↓1↓1↑↓↓0↑0↑↑↓↑↓↑↓↓↓0↓0"


def glyphs_to_ascii(glyphs):
    out, i = [], 0
    while i < len(glyphs):
        tok = "(" if glyphs[i] == "↑" else ")"
        i += 1
        while i < len(glyphs) and glyphs[i].isdigit():
            tok += glyphs[i]
            i += 1
        out.append(tok)
    return " ".join(out)


def test_encode_trivial():
    assert str(encode(identity(POINT))) == ""
    assert str(encode(identity(build_Bn(1)))) == "(0 )0"


def test_paper_example_word():
    assert PAPER_F.is_valid()
    word = encode(PAPER_F)
    assert str(word) == glyphs_to_ascii(PAPER_GLYPHS)
    assert len(word) == 24
    assert decode(word) == PAPER_F


def test_shared_edge_carries_one_label():
    # both root edges of the domain run through the codomain edge above the root
    labels = edge_labels(PAPER_F)
    assert labels[1] == 0


def test_conflicting_labels_detected():
    # not an order embedding: the leaf's image lies on the chain's path
    bogus = OrderEmbedding(P("(())()"), P("((()))"), (0, 1, 3, 2))
    with pytest.raises(LabelConflictError):
        encode(bogus)


def test_decode_examples():
    assert decode(parse_word("")) == identity(POINT)
    a, b = decode("(0 )0 ( )"), decode("( ) (0 )0")
    assert a != b
    assert {a, b} == set(oracle_homset(build_Bn(1), build_Bn(2), Category.PT))


@pytest.mark.parametrize(
    "text, index",
    [
        ("( ( )", 3),  # unbalanced: missing close at end
        (")0 (0", 0),
        ("(0 )1", 1),
        ("( (1 )1 )", 1),  # labelled edge hanging off an unlabelled one
        ("(1 )1", 0),  # label too large for its depth
    ],
)
def test_decode_errors(text, index):
    with pytest.raises(CatalanDecodeError) as exc:
        decode(text)
    assert exc.value.index == index


def test_parse_word_rejects_garbage():
    with pytest.raises(CatalanDecodeError):
        parse_word("( x )")


def test_roundtrip_and_injectivity_exhaustive():
    for t in trees_up_to(4):
        for u in trees_up_to(6):
            hom = oracle_homset(t, u, Category.PT)
            words = [encode(f) for f in hom]
            assert len(set(words)) == len(words)
            for f, w in zip(hom, words):
                assert decode(w) == f
                assert decode(parse_word(str(w))) == f


def test_label_bound():
    for t in trees_up_to(4):
        for u in trees_up_to(6):
            for f in enumerate_morphisms(t, u, Category.PT):
                labels = [x for x in encode(f).n if x is not None]
                assert all(x < t.n_vertices for x in labels)


def test_compare_examples():
    w = parse_word("(0 )0 ( )")
    assert compare(w, w) is Ordering.EQ
    assert compare(parse_word("( ) (0 )0"), w) is Ordering.LT
    assert compare(w, parse_word("( ) (0 )0")) is Ordering.GT
    assert compare(parse_word("(0 )0"), parse_word("( ( ) )")) is Ordering.LT
    assert compare(parse_word("( ( ) )"), parse_word("( ) ( )")) is Ordering.GT


def test_compare_bracket_row_before_labels():
    # ")" < "(" at the second position decides before any label is read
    assert compare(parse_word("(0 )0 (0 )0"), parse_word("( ( ) )")) is Ordering.LT


def test_compare_total_on_codomains_up_to_seven():
    t = build_Bn(1)
    words = [encode(f) for u in trees_up_to(7) for f in enumerate_morphisms(t, u, Category.PT)]
    assert len(set(words)) == len(words)
    ordered = sorted(words)
    for a, b in zip(ordered, ordered[1:]):
        assert compare(a, b) is Ordering.LT
        assert compare(b, a) is Ordering.GT


def test_pt_enumeration_sorted_by_word():
    hom = enumerate_morphisms(build_Bn(1), P("(()())"), Category.PT)
    words = [encode(f) for f in hom]
    assert words == sorted(words)


def test_admissible_exhaustive_small():
    checked = 0
    for t in trees_up_to(5):
        for u in trees_up_to(5):
            hom = enumerate_morphisms(t, u, Category.PT)
            for f, g in itertools.combinations(hom, 2):
                assert encode(f) < encode(g)
                for v in trees_up_to(5):
                    for h in enumerate_morphisms(u, v, Category.PT):
                        checked += 1
                        assert compare(encode(compose(f, h)), encode(compose(g, h))) is Ordering.LT
    assert checked > 0


def test_word_projections():
    w = encode(PAPER_F)
    assert w.p == "((((()()))())((()()())))"
    assert w.n[:4] == (0, 0, 1, 1)
    assert isinstance(CatalanWord.parse(str(w)), CatalanWord)
