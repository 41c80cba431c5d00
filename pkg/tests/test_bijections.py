"""Golden tables and exhaustive round trips for the three bijections."""

import pytest

from operad_forge import bijections as bj, systems
from operad_forge.treeterm import LEAF, parse_tree

# --- Zin normal forms <-> planar binary trees ------------------------------

ZIN_PAIRS_3 = [
    ("x(x(1,1),1)", "(((**)*)*)"),
    ("x(y(1,1),1)", "((*(**))*)"),
    ("y(x(1,1),1)", "(*((**)*))"),
    ("y(y(1,1),1)", "(*(*(**)))"),
    ("y(1,x(1,1))", "((**)(**))"),
]

ZIN_PAIRS_4 = [
    ("x(x(x(1,1),1),1)", "((((**)*)*)*)"),
    ("x(x(y(1,1),1),1)", "(((*(**))*)*)"),
    ("x(y(x(1,1),1),1)", "((*((**)*))*)"),
    ("x(y(y(1,1),1),1)", "((*(*(**)))*)"),
    ("x(y(1,x(1,1)),1)", "(((**)(**))*)"),
    ("y(x(x(1,1),1),1)", "(*(((**)*)*))"),
    ("y(x(y(1,1),1),1)", "(*((*(**))*))"),
    ("y(y(x(1,1),1),1)", "(*(*((**)*)))"),
    ("y(y(y(1,1),1),1)", "(*(*(*(**))))"),
    ("y(y(1,x(1,1)),1)", "(*((**)(**)))"),
    ("y(1,x(x(1,1),1))", "(((**)*)(**))"),
    ("y(1,x(y(1,1),1))", "((*(**))(**))"),
    ("y(x(1,1),x(1,1))", "((**)((**)*))"),
    ("y(y(1,1),x(1,1))", "((**)(*(**)))"),
]

ZIN_PAIRS_5_MIXED = [
    ("y(1,x(x(x(1,1),1),1))", "((((**)*)*)(**))"),
    ("y(1,x(x(y(1,1),1),1))", "(((*(**))*)(**))"),
    ("y(1,x(y(x(1,1),1),1))", "((*((**)*))(**))"),
    ("y(1,x(y(y(1,1),1),1))", "((*(*(**)))(**))"),
    ("y(1,x(y(1,x(1,1)),1))", "(((**)(**))(**))"),
    ("y(x(1,1),x(x(1,1),1))", "(((**)*)((**)*))"),
    ("y(x(1,1),x(y(1,1),1))", "((*(**))((**)*))"),
    ("y(y(1,1),x(x(1,1),1))", "(((**)*)(*(**)))"),
    ("y(y(1,1),x(y(1,1),1))", "((*(**))(*(**)))"),
    ("y(x(x(1,1),1),x(1,1))", "((**)(((**)*)*))"),
    ("y(x(y(1,1),1),x(1,1))", "((**)((*(**))*))"),
    ("y(y(x(1,1),1),x(1,1))", "((**)(*((**)*)))"),
    ("y(y(y(1,1),1),x(1,1))", "((**)(*(*(**))))"),
    ("y(y(1,x(1,1)),x(1,1))", "((**)((**)(**)))"),
]


@pytest.mark.parametrize("pairs", [ZIN_PAIRS_3, ZIN_PAIRS_4,
                                   ZIN_PAIRS_5_MIXED])
def test_zin_golden_tables(pairs):
    for mono, pbt in pairs:
        tree = parse_tree(mono)
        b = bj.parse_pbt(pbt)
        assert bj.zin_to_pbt(tree) == b, mono
        assert bj.pbt_to_zin(b) == tree, pbt


def test_zin_arity5_structural_families():
    # x(U,1) appends a right leaf; y(U,1) prepends a left leaf
    for u in systems.normal_forms("Zin", 4):
        b = bj.zin_to_pbt(u)
        assert bj.zin_to_pbt(("x", u, LEAF)) == (b, bj.BULLET)
        assert bj.zin_to_pbt(("y", u, LEAF)) == (bj.BULLET, b)


def test_zin_leaf_maps_to_one_vertex_tree():
    assert bj.zin_to_pbt(LEAF) == (bj.BULLET, bj.BULLET)
    assert bj.pbt_to_zin((bj.BULLET, bj.BULLET)) == LEAF


@pytest.mark.parametrize("n", range(1, 9))
def test_zin_round_trip(n):
    forms = systems.normal_forms("Zin", n)
    images = set()
    for t in forms:
        b = bj.zin_to_pbt(t)
        assert bj.internal_vertices(b) == n
        assert bj.pbt_to_zin(b) == t
        images.add(b)
    assert len(images) == len(forms)


def test_zin_rejects_non_normal():
    with pytest.raises(ValueError):
        bj.zin_to_pbt(parse_tree("x(1,y(1,1))"))


# --- Bicom normal forms <-> lattice words ----------------------------------

BICOM_PAIRS_3 = [
    ("x(1,x(1,1))", "ENEN"), ("x(x(1,1),1)", "EENN"),
    ("y(x(1,1),1)", "ENNE"), ("x(y(1,1),1)", "NEEN"),
    ("y(y(1,1),1)", "NNEE"), ("y(1,y(1,1))", "NENE"),
]

BICOM_PAIRS_4 = [
    ("x(1,x(x(1,1),1))", "ENEENN"), ("x(1,x(1,x(1,1)))", "ENENEN"),
    ("x(x(1,x(1,1)),1)", "EENENN"), ("y(x(1,x(1,1)),1)", "ENENNE"),
    ("x(x(1,1),x(1,1))", "EENNEN"), ("x(x(x(1,1),1),1)", "EEENNN"),
    ("y(x(x(1,1),1),1)", "EENNNE"), ("x(y(x(1,1),1),1)", "ENNEEN"),
    ("y(y(x(1,1),1),1)", "ENNENE"), ("y(x(1,1),y(1,1))", "ENNNEE"),
    ("x(y(1,1),x(1,1))", "NEEENN"), ("x(x(y(1,1),1),1)", "NEENEN"),
    ("y(x(y(1,1),1),1)", "NEENNE"), ("x(y(y(1,1),1),1)", "NNEEEN"),
    ("y(y(y(1,1),1),1)", "NNNEEE"), ("y(y(1,1),y(1,1))", "NNEENE"),
    ("x(y(1,y(1,1)),1)", "NENEEN"), ("y(y(1,y(1,1)),1)", "NNENEE"),
    ("y(1,y(1,y(1,1)))", "NENENE"), ("y(1,y(y(1,1),1))", "NENNEE"),
]


@pytest.mark.parametrize("pairs", [BICOM_PAIRS_3, BICOM_PAIRS_4])
def test_bicom_golden_tables(pairs):
    for mono, word in pairs:
        tree = parse_tree(mono)
        assert bj.bicom_to_word(tree) == word, mono
        assert bj.word_to_bicom(word) == tree, word


def test_bicom_pure_combs_hit_dyck_words():
    # x-only normal forms map to Dyck words (never dip below the diagonal)
    for t in systems.normal_forms("Bicom", 5):
        w = bj.bicom_to_word(t)
        if bj._is_pure(t, "x"):
            h = 0
            for ch in w:
                h += 1 if ch == "E" else -1
                assert h >= 0


@pytest.mark.parametrize("n", range(1, 9))
def test_bicom_round_trip(n):
    forms = systems.normal_forms("Bicom", n)
    words = set()
    for t in forms:
        w = bj.bicom_to_word(t)
        assert len(w) == 2 * (n - 1) and w.count("E") == n - 1
        assert bj.word_to_bicom(w) == t
        words.add(w)
    assert len(words) == len(forms)


def test_bicom_surjective_onto_lattice_words():
    from itertools import combinations
    n = 5
    length = 2 * (n - 1)
    all_words = {"".join("E" if i in pos else "N" for i in range(length))
                 for pos in combinations(range(length), n - 1)}
    got = {bj.bicom_to_word(t) for t in systems.normal_forms("Bicom", n)}
    assert got == all_words


def test_word_to_bicom_rejects_unbalanced():
    with pytest.raises(ValueError):
        bj.word_to_bicom("EEN")
    with pytest.raises(ValueError):
        bj.word_to_bicom("EX")


# --- Flex normal forms <-> L normal forms ----------------------------------

@pytest.mark.parametrize("n", range(1, 9))
def test_flex_l_round_trip(n):
    flex_forms = systems.normal_forms("Flex", n)
    l_forms = systems.normal_forms("L", n)
    assert len(flex_forms) == len(l_forms) == systems.dim_formula("Flex", n)
    images = {bj.flex_to_L(t) for t in flex_forms}
    assert images == set(l_forms)
    for t in flex_forms:
        assert bj.L_to_flex(bj.flex_to_L(t)) == t


def test_flex_l_small_cases():
    assert bj.flex_to_L(LEAF) == LEAF
    assert bj.flex_to_L(parse_tree("x(1,1)")) == parse_tree("z(1,1)")
    assert bj.flex_to_L(parse_tree("y(1,1)")) == parse_tree("t(1,1)")
    assert bj.flex_to_L(parse_tree("y(1,x(1,1))")) == parse_tree("t(1,t(1,1))")


def test_flex_to_l_rejects_non_normal():
    with pytest.raises(ValueError):
        bj.flex_to_L(parse_tree("y(1,y(1,y(1,1)))"))


def test_pbt_parse_format():
    for s in ("*", "(**)", "((**)(*(**)))"):
        assert bj.format_pbt(bj.parse_pbt(s), unicode_bullet=False) == s
    assert bj.format_pbt(bj.parse_pbt("(••)")) == "(••)"
