from itertools import combinations, permutations, product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import coeffs, f_contrib_sym, g_cube_sym, nested_forks, nested_polish, nested_trees
from toricube import kernels
from toricube.cubical import legal_types
from toricube.polynomial import catalan
from toricube.trees import (
    BRACKET,
    PAREN,
    PlaneTree,
    TreeError,
    catalan_to_binary,
    catalan_to_tree,
    classify,
    count_forks,
    count_kind,
    decode_polish,
    encode_polish,
    enumerate_plane_trees,
    insert_marked_set,
    insert_type1,
    insert_type2,
    mirror_binary,
    postorder_to_preorder,
    preorder_to_postorder,
    remove_vertex,
    remove_vertices,
    statistic_m,
    tree_to_catalan,
    vertex_kind,
)

FIGURE_TREE = "xxF2xxF2F1F2"
PATH3 = decode_polish("xF1F1")
CHERRY = decode_polish("xxF2")


def trees(n):
    return list(enumerate_plane_trees(n))


@pytest.mark.parametrize("n, count", [(1, 1), (3, 2), (6, 42)])
def test_enumeration_counts(n, count):
    assert len(trees(n)) == count


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_matches_nested_oracle(n):
    got = [t.polish() for t in enumerate_plane_trees(n)]
    assert len(got) == len(set(got)) == catalan(n - 1)
    assert set(got) == {nested_polish(t) for t in nested_trees(n)}
    assert got == [t.polish() for t in enumerate_plane_trees(n)]


def test_enumeration_rejects_empty():
    with pytest.raises(ValueError):
        list(enumerate_plane_trees(0))


def test_polish_examples():
    assert encode_polish(decode_polish(FIGURE_TREE)) == FIGURE_TREE
    assert decode_polish("xxF₂xxF₂F₁F₂") == decode_polish(FIGURE_TREE)
    assert encode_polish(PlaneTree([0])) == "x"
    assert encode_polish(PlaneTree.from_nested([[], [], []])) == "xxxF3"


@pytest.mark.parametrize("word, pos", [("xxF3", "position 3"), ("xqF1", "position 1"), ("xx", "2 values"), ("F0x", "position 0")])
def test_malformed_words_report_position(word, pos):
    with pytest.raises(TreeError, match=pos):
        decode_polish(word)


@pytest.mark.parametrize("n", range(1, 10))
def test_polish_and_nested_round_trips(n):
    for t in enumerate_plane_trees(n):
        assert decode_polish(encode_polish(t)) == t
        assert PlaneTree.from_nested(t.to_nested()) == t
        assert PlaneTree.from_shape(t.shape()) == t


def test_postorder_labels_put_root_last():
    t = decode_polish(FIGURE_TREE)
    assert t.root == t.size == 8
    assert t.children(8) == (3, 7)
    assert t.children(3) == (1, 2)
    assert t.parent(1) == 3


def test_classify_examples():
    assert vertex_kind(PATH3, 1, PAREN) == 0
    assert vertex_kind(CHERRY, 1, PAREN) == 1
    assert vertex_kind(CHERRY, 1, BRACKET) == 0
    assert vertex_kind(PATH3, 2, PAREN) == vertex_kind(PATH3, 2, BRACKET) == 2
    with pytest.raises(TreeError):
        vertex_kind(PATH3, 3)


@pytest.mark.parametrize("n", range(2, 9))
def test_schemes_agree_unless_root_has_a_first_leaf(n):
    for t in enumerate_plane_trees(n):
        first = t.children(t.root)[0]
        if not t.is_leaf(first):
            assert classify(t, PAREN) == classify(t, BRACKET)


def test_fork_examples():
    assert count_forks(decode_polish("xF1F1")) == 0
    assert count_forks(CHERRY) == 1


@pytest.mark.parametrize("d", range(0, 10))
def test_type0_and_fork_distributions(d):
    want = coeffs(g_cube_sym(d))
    type0 = [0] * (d + 1)
    forks = [0] * (d + 1)
    for t in enumerate_plane_trees(d + 1):
        type0[count_kind(t, 0, PAREN)] += 1
        forks[count_forks(t)] += 1
    trim = lambda v: v[: max(k for k, c in enumerate(v) if c) + 1]  # noqa: E731
    nested = [0] * (d + 1)
    for t in nested_trees(d + 1):
        nested[nested_forks(t)] += 1
    assert trim(type0) == want
    assert trim(forks) == want
    assert trim(nested) == want


@pytest.mark.parametrize("d", range(10, 13))
def test_type0_lemma_by_kernel(d):
    hist = kernels.tree_histogram(d + 1, 0, 0, kernels.PAREN_STAT)
    while hist and not hist[-1]:
        hist.pop()
    assert hist == coeffs(g_cube_sym(d))


@pytest.mark.parametrize("d", range(0, 11))
def test_marked_type0_counts(d):
    hist = kernels.tree_histogram(d + 1, 0, 0, kernels.PAREN_STAT)
    for k in range(d // 2 + 1):
        marked = sum(c * comb(m, k) for m, c in enumerate(hist))
        assert marked == catalan(d - k) * comb(d - k, k)


def test_remove_examples():
    assert remove_vertex(CHERRY, 1) == decode_polish("xF1")
    assert remove_vertex(PATH3, 2) == decode_polish("xF1")
    with pytest.raises(TreeError, match="root"):
        remove_vertex(PATH3, 3)
    with pytest.raises(TreeError):
        remove_vertex(PATH3, 9)


def test_remove_splices_children_in_place():
    t = decode_polish(FIGURE_TREE)
    assert remove_vertex(t, 3) == decode_polish("xxxxF2F1F3")


def _remove_in_sequence(t, labels):
    remaining = list(labels)
    while remaining:
        v = remaining.pop(0)
        t = remove_vertex(t, v)
        remaining = [u - 1 if u > v else u for u in remaining]
    return t


@pytest.mark.parametrize("n", range(2, 8))
def test_removal_order_independence(n):
    for t in enumerate_plane_trees(n):
        labels = list(t.nonroot())
        for k in range(1, min(3, len(labels)) + 1):
            for subset in combinations(labels, k):
                want = remove_vertices(t, subset)
                for order in permutations(subset):
                    assert _remove_in_sequence(t, order) == want


def test_insert_type1_examples():
    assert insert_type1(decode_polish("xxxF3F1"), 1).polish() == "xxxxF3F2"
    assert insert_type1(decode_polish("xxF2xxF3xF2"), 4).polish() == "xxF2xxxF4xF2"
    with pytest.raises(TreeError):
        insert_type1(CHERRY, 4)


def test_insert_type2_examples():
    assert insert_type2(decode_polish("xF1xxF3"), 4).polish() == "xF1xF2xF2"
    with pytest.raises(TreeError):
        insert_type2(CHERRY, 1)
    with pytest.raises(TreeError):
        insert_type2(CHERRY, 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_insertions_invert_removal_and_keep_earlier_types(n):
    for t in enumerate_plane_trees(n):
        before = classify(t, BRACKET)
        for p in range(1, n + 1):
            for kind, insert in ((1, insert_type1), (2, insert_type2)):
                if kind == 2 and p < 2:
                    continue
                y = insert(t, p)
                assert remove_vertex(y, p) == t
                if p >= 2:
                    assert vertex_kind(y, p, BRACKET) == kind
                after = classify(y, BRACKET)
                assert all(after[v] == before[v] for v in range(1, p))


@pytest.mark.parametrize("n", range(1, 8))
def test_single_insertions_are_unique(n):
    bigger = trees(n + 1)
    for t in enumerate_plane_trees(n):
        for p in range(2, n + 1):
            for kind, insert in ((1, insert_type1), (2, insert_type2)):
                hits = [y for y in bigger if vertex_kind(y, p, BRACKET) == kind and remove_vertex(y, p) == t]
                assert hits == [insert(t, p)]


def test_marked_set_small_cases():
    t = decode_polish(FIGURE_TREE)
    assert insert_marked_set(t, [], []) == t
    assert insert_marked_set(t, [4], [1]) == insert_type1(t, 4)
    assert insert_marked_set(t, [4], [2]) == insert_type2(t, 4)
    for bad in (([1], [1]), ([2], [3]), ([2, 2], [1, 1]), ([2], [1, 2]), ([12], [1])):
        with pytest.raises(TreeError):
            insert_marked_set(t, *bad)


@pytest.mark.parametrize("n", range(1, 7))
def test_marked_set_uniqueness_by_brute_force(n):
    for k in (1, 2):
        bigger = trees(n + k)
        for t in enumerate_plane_trees(n):
            for positions in combinations(range(2, n + k), k):
                for kinds in product((1, 2), repeat=k):
                    hits = [
                        y
                        for y in bigger
                        if all(vertex_kind(y, p, BRACKET) == c for p, c in zip(positions, kinds))
                        and remove_vertices(y, positions) == t
                    ]
                    assert hits == [insert_marked_set(t, positions, kinds)]


def test_statistic_examples_and_errors():
    path2 = decode_polish("xF1")
    assert statistic_m(path2, 2, 1, 0) == 1
    t = decode_polish(FIGURE_TREE)
    assert statistic_m(t, 8, 0, 0, PAREN) == count_kind(t, 0, PAREN)
    with pytest.raises(TreeError):
        statistic_m(t, 8, 0, 7)
    with pytest.raises(TreeError):
        statistic_m(t, 7, 1, 0)


def _generating_sum(d, i, j, scheme):
    out = [0] * (d + 1)
    for t in enumerate_plane_trees(d):
        out[d - statistic_m(t, d, i, j, scheme)] += 1
    while out and not out[-1]:
        out.pop()
    return out


@pytest.mark.parametrize("d", range(2, 9))
def test_generating_sums_match_closed_form(d):
    for i, j in legal_types(d):
        if j >= d - 1:
            continue
        want = coeffs(f_contrib_sym(d, i, j))
        assert _generating_sum(d, i, j, PAREN) == want
        if i >= 1:
            assert _generating_sum(d, i, j, BRACKET) == want


def _literal_paren_kind1_statistic(t, d, i, j):
    """Type (1) read as 'a leaf that is not leftmost', leaving root-attached first leaves unclassified."""
    m = 0
    for v in t.nonroot():
        first = t.children(t.parent(v))[0] == v
        leaf = t.is_leaf(v)
        if leaf and first and t.parent(v) != t.root:
            m += 1
        elif leaf and not first and (v <= i or v >= d - j):
            m += 1
        elif not leaf and first and v >= d - j:
            m += 1
    return m


def test_literal_paren_type1_reading_miscounts():
    d, i, j = 4, 1, 0
    out = [0] * (d + 1)
    for t in enumerate_plane_trees(d):
        out[d - _literal_paren_kind1_statistic(t, d, i, j)] += 1
    while not out[-1]:
        out.pop()
    assert out != coeffs(f_contrib_sym(d, i, j))


def test_chain_worked_example():
    fig = decode_polish(FIGURE_TREE)
    pre = postorder_to_preorder(fig)
    assert tree_to_catalan(pre) == "++--+++--+-+--"
    assert preorder_to_postorder(catalan_to_tree("++--+++--+-+--")) == fig


def test_chain_on_a_single_vertex():
    one = PlaneTree([0])
    assert tree_to_catalan(one) == ""
    assert catalan_to_tree("") == one
    assert preorder_to_postorder(one) == one


@pytest.mark.parametrize("word", ["+", "-+", "+--+", "++-"])
def test_unbalanced_words_are_rejected(word):
    with pytest.raises(TreeError):
        catalan_to_tree(word)
    with pytest.raises(TreeError):
        catalan_to_binary(word)


@pytest.mark.parametrize("n", range(1, 10))
def test_chain_is_a_bijection_carrying_forks_to_type0(n):
    images = set()
    for t in enumerate_plane_trees(n):
        u = preorder_to_postorder(t)
        assert postorder_to_preorder(u) == t
        assert count_kind(u, 0, PAREN) == count_forks(t)
        assert catalan_to_tree(tree_to_catalan(t)) == t
        images.add(u)
    assert len(images) == catalan(n - 1)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.sampled_from(list(enumerate_plane_trees(n)) if n <= 9 else [PlaneTree([0] * (n - 1) + [n - 1])])))
def test_binary_mirror_is_an_involution(t):
    b = catalan_to_binary(tree_to_catalan(t))
    assert mirror_binary(mirror_binary(b)) == b
