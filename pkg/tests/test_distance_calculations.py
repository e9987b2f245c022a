import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from analysis.graph.distance_calculations import DistanceCalculator
from analysis.trees.tree_enumeration import prufer_to_tree
from models.graph_models import Graph
from utils.exceptions import DisconnectedGraphError


P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
K13 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@st.composite
def random_trees(draw, max_order=12):
    n = draw(st.integers(min_value=3, max_value=max_order))
    sequence = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_to_tree(sequence, n)


def test_path_distances():
    d = DistanceCalculator.all_pairs_distances(P4)
    assert d.values.tolist() == [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]]
    assert d.values.dtype == np.int64
    assert not d.values.flags.writeable


def test_transmissions():
    tr = DistanceCalculator.transmissions(DistanceCalculator.all_pairs_distances(P4))
    assert tr.values.tolist() == [6, 4, 4, 6]
    assert (tr.tr_max, tr.tr_min) == (6, 4)

    star = DistanceCalculator.transmissions(DistanceCalculator.all_pairs_distances(K13))
    assert star.values.tolist() == [3, 5, 5, 5]


def test_q_matrix_of_k2():
    q = DistanceCalculator.q_matrix(Graph.from_edges(2, [(0, 1)]))
    assert q.values.tolist() == [[1, 1], [1, 1]]


def test_q_matrix_diagonal_is_transmission():
    q = DistanceCalculator.q_matrix(P4)
    assert np.diag(q.values).tolist() == [6, 4, 4, 6]
    assert q.values[0, 3] == 3


def test_single_vertex():
    d = DistanceCalculator.all_pairs_distances(Graph(1, ()))
    assert d.values.tolist() == [[0]]


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError) as err:
        DistanceCalculator.all_pairs_distances(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert err.value.representatives == (0, 2)


def test_graph_stats():
    stats = DistanceCalculator.graph_stats(K13)
    assert stats.wiener_index == 9
    assert stats.diameter == 2
    assert stats.pendant_vertices == (1, 2, 3)
    assert stats.branching_vertices == 1
    assert DistanceCalculator.graph_stats(P4).wiener_index == 10


@settings(max_examples=60, deadline=None)
@given(random_trees())
def test_bfs_matches_networkx(tree):
    d = DistanceCalculator.all_pairs_distances(tree)
    nx_graph = nx.Graph(list(tree.edges))
    nx_graph.add_nodes_from(range(tree.order))
    for u, lengths in nx.all_pairs_shortest_path_length(nx_graph):
        for v, length in lengths.items():
            assert d[u, v] == length


@settings(max_examples=40, deadline=None)
@given(random_trees(max_order=9))
def test_bfs_matches_tree_walk(tree):
    d = DistanceCalculator.all_pairs_distances(tree)
    for u in range(tree.order):
        for v in range(tree.order):
            assert d[u, v] == DistanceCalculator.tree_distance_by_walk(tree, u, v)


@settings(max_examples=40, deadline=None)
@given(random_trees(), st.randoms(use_true_random=False))
def test_relabeling_permutes_distances(tree, rnd):
    perm = list(range(tree.order))
    rnd.shuffle(perm)
    d = DistanceCalculator.all_pairs_distances(tree).values
    d_perm = DistanceCalculator.all_pairs_distances(tree.relabel(perm)).values
    for u in range(tree.order):
        for v in range(tree.order):
            assert d_perm[perm[u], perm[v]] == d[u, v]
