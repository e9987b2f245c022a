import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from analysis.trees.tree_enumeration import TreeEnumerator, prufer_to_tree
from analysis.trees.tree_families import TreeFamilies
from models.graph_models import Graph
from utils.exceptions import EnumerationCapError, GraphFormatError, NotATreeError

TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


@pytest.mark.parametrize("graph, expected", [
    (Graph(1, ()), "()"),
    (Graph.from_edges(2, [(0, 1)]), "[()()]"),
    (Graph.from_edges(3, [(0, 1), (1, 2)]), "(()())"),
    (Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]), "(()()())"),
    (Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]), "[(())(())]"),
])
def test_canonical_codes(graph, expected):
    assert TreeEnumerator.canonical_code(graph) == expected


def test_code_length():
    for n in range(1, 9):
        for code in TreeEnumerator.tree_codes(n):
            assert len(code) in (2 * n, 2 * n + 2)


def test_canonical_code_needs_a_tree():
    with pytest.raises(NotATreeError):
        TreeEnumerator.canonical_code(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


def test_code_is_relabeling_invariant():
    g = TreeFamilies.make_P(11, 2, 6)
    expected = TreeEnumerator.canonical_code(g)
    rnd = random.Random(7)
    for _ in range(100):
        perm = list(range(g.order))
        rnd.shuffle(perm)
        assert TreeEnumerator.canonical_code(g.relabel(perm)) == expected


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=3, max_value=10).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2),
                        st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))))
def test_equal_codes_iff_isomorphic(case):
    n, first, second = case
    a, b = prufer_to_tree(first, n), prufer_to_tree(second, n)
    same_code = TreeEnumerator.canonical_code(a) == TreeEnumerator.canonical_code(b)
    assert same_code == nx.is_isomorphic(nx.Graph(list(a.edges)), nx.Graph(list(b.edges)))


def test_graph_from_code_round_trip():
    for n in range(1, 10):
        for code in TreeEnumerator.tree_codes(n):
            g = TreeEnumerator.graph_from_code(code)
            assert g.order == n and g.is_tree()
            assert TreeEnumerator.canonical_code(g) == code


@pytest.mark.parametrize("code", ["(()", "())(", "(x)", "()()", "[()]"])
def test_graph_from_bad_code(code):
    with pytest.raises(GraphFormatError):
        TreeEnumerator.graph_from_code(code)




@pytest.mark.parametrize("n, count", sorted(TREE_COUNTS.items()))
def test_enumeration_counts(n, count):
    codes = TreeEnumerator.tree_codes(n)
    assert len(codes) == count
    assert list(codes) == sorted(set(codes))


def test_enumeration_matches_networkx():
    for n in range(3, 11):
        expected = sum(1 for _ in nx.nonisomorphic_trees(n))
        assert len(list(TreeEnumerator.enumerate_trees(n))) == expected


def test_enumerated_trees_are_pairwise_non_isomorphic():
    trees = [nx.Graph(list(g.edges)) for g in TreeEnumerator.enumerate_trees(7)]
    for i in range(len(trees)):
        for j in range(i + 1, len(trees)):
            assert not nx.is_isomorphic(trees[i], trees[j])


@pytest.mark.parametrize("n", range(1, 8))
def test_prufer_oracle_matches_enumeration(n):
    assert TreeEnumerator.prufer_count_oracle(n) == len(TreeEnumerator.tree_codes(n))


@pytest.mark.slow
@pytest.mark.parametrize("n, count", [(8, 23), (9, 47)])
def test_prufer_oracle_larger_orders(n, count):
    assert TreeEnumerator.prufer_count_oracle(n) == count


def test_caps():
    with pytest.raises(EnumerationCapError):
        TreeEnumerator.tree_codes(17)
    with pytest.raises(EnumerationCapError):
        TreeEnumerator.tree_codes(8, cap=7)
    with pytest.raises(EnumerationCapError):
        list(TreeEnumerator.enumerate_trees(0))
    with pytest.raises(EnumerationCapError):
        TreeEnumerator.prufer_count_oracle(10)


def test_prufer_decoding():
    g = prufer_to_tree([3, 3, 3], 5)
    assert g.edges == ((0, 3), (1, 3), (2, 3), (3, 4))
