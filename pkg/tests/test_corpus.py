"""The corpus builders themselves have known answers: class counts for small
connected graphs and trees are classical, so a miscounted enumeration means a
broken canonical form."""

from collections import Counter

import corpus
from domcover import is_block_graph, is_connected

CONNECTED_CLASS_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
TREE_CLASS_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def test_connected_graph_class_counts(corpus7):
    assert Counter(g.n for g in corpus7) == CONNECTED_CLASS_COUNTS


def test_corpus7_members_are_connected_without_isolated(corpus7):
    assert all(is_connected(g) for g in corpus7)
    assert not any(g.has_isolated_vertex() for g in corpus7)


def test_corpus7_members_pairwise_distinct(corpus7):
    keys = {corpus.canonical_key(g.n, tuple(g.edges())) for g in corpus7}
    assert len(keys) == len(corpus7)


def test_tree_class_counts(trees10):
    assert Counter(t.n for t in trees10) == TREE_CLASS_COUNTS
    assert all(t.m == t.n - 1 and is_connected(t) for t in trees10)


def test_canonical_key_invariant_under_relabeling():
    # same 5-cycle written two ways
    a = corpus.canonical_key(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)))
    b = corpus.canonical_key(5, ((0, 2), (2, 4), (4, 1), (1, 3), (3, 0)))
    assert a == b
    c = corpus.canonical_key(5, ((0, 1), (1, 2), (2, 3), (3, 4)))  # path, not cycle
    assert a != c


def test_tree_key_distinguishes_known_pairs():
    star = corpus.tree_key(4, ((0, 1), (0, 2), (0, 3)))
    path = corpus.tree_key(4, ((0, 1), (1, 2), (2, 3)))
    assert star != path
    relabeled = corpus.tree_key(4, ((2, 0), (2, 1), (2, 3)))
    assert star == relabeled


def test_spiders_have_one_branch_vertex():
    for g in corpus.spiders(15):
        assert g.m == g.n - 1
        assert sum(1 for v in range(g.n) if g.degree(v) >= 3) == 1


def test_random_corpora_are_seeded_and_valid(corpus_random):
    assert corpus_random == corpus.random_connected(200, 12)
    assert all(is_connected(g) and 2 <= g.n <= 12 for g in corpus_random)
    assert all(g.m == g.n - 1 for g in corpus.random_trees(500, 15))
    assert all(is_block_graph(g) for g in corpus.random_block_graphs(300, 14))
    assert all(is_block_graph(g) for g in corpus.glued_cliques())
