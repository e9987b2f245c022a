import pytest

from data.edge_list_adapter import EdgeListAdapter
from models.graph_models import Graph
from utils.exceptions import DisconnectedGraphError, GraphFormatError, GraphValidationError, NotATreeError


K3_TEXT = "3 3\n0 1\n1 2\n0 2\n"


def test_edges_are_normalized_and_sorted():
    g = Graph.from_edges(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.adjacency == ((1,), (0, 2), (1,))
    assert g == Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 3)]])
def test_invalid_edges_rejected(edges):
    with pytest.raises(GraphValidationError):
        Graph.from_edges(3, edges)


def test_order_must_be_positive():
    with pytest.raises(GraphValidationError):
        Graph(0, ())


def test_disconnected_graph_names_two_components():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert not g.is_connected()
    with pytest.raises(DisconnectedGraphError) as err:
        g.require_connected()
    assert err.value.representatives == (0, 2)
    assert isinstance(err.value, ValueError)


def test_tree_checks():
    assert Graph(1, ()).is_tree()
    assert Graph.from_edges(3, [(0, 1), (1, 2)]).is_tree()
    with pytest.raises(NotATreeError):
        Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]).require_tree()


def test_relabel_requires_permutation():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert g.relabel([2, 1, 0]).edges == ((0, 1), (1, 2))
    assert g.relabel([1, 0, 2]).edges == ((0, 1), (0, 2))
    with pytest.raises(GraphValidationError):
        g.relabel([0, 0, 1])




def test_parse_edge_list_k3():
    g = EdgeListAdapter.parse_edge_list(K3_TEXT)
    assert g.order == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_blank_lines_are_ignored():
    g = EdgeListAdapter.parse_edge_list("\n3 2\n\n0 1\n\n1 2\n\n")
    assert g.edges == ((0, 1), (1, 2))


def test_writer_output_parses_back():
    g = Graph.from_edges(5, [(3, 4), (0, 1), (1, 3), (1, 2)])
    text = EdgeListAdapter.write_edge_list(g)
    assert text == "5 4\n0 1\n1 2\n1 3\n3 4\n"
    assert EdgeListAdapter.parse_edge_list(text) == g


@pytest.mark.parametrize("text, line", [
    ("3\n", 1),
    ("x y\n", 1),
    ("3 2\n0 1\n", 2),
    ("3 1\n0 1\n1 2\n", 3),
    ("3 1\n0 3\n", 2),
    ("3 1\n1 1\n", 2),
    ("3 2\n0 1\n1 0\n", 3),
    ("3 1\n0 a\n", 2),
])
def test_parse_errors_carry_line_number(text, line):
    with pytest.raises(GraphFormatError) as err:
        EdgeListAdapter.parse_edge_list(text)
    assert err.value.line == line
    assert str(err.value).startswith(f"line {line}:")


def test_empty_document_rejected():
    with pytest.raises(GraphFormatError):
        EdgeListAdapter.parse_edge_list("  \n\n")


def test_fixture_line_format():
    g = Graph.from_edges(3, [(0, 1), (0, 2)])
    line = EdgeListAdapter.format_fixture_line("(()())", g)
    assert line == "(()())\t0-1 0-2"
    code, parsed = EdgeListAdapter.parse_fixture_line(line)
    assert code == "(()())"
    assert parsed == g


def test_bicentroidal_fixture_order():
    code, g = EdgeListAdapter.parse_fixture_line("[(())(())]\t0-1 0-2 2-3")
    assert g.order == 4
    assert g.size == 3


def test_bad_fixture_token():
    with pytest.raises(GraphFormatError):
        EdgeListAdapter.parse_fixture_line("(()())\t0_1 0-2", 7)


def test_fixture_file_round_trip(tmp_path):
    entries = [
        ("[()()]", Graph.from_edges(2, [(0, 1)])),
        ("(()())", Graph.from_edges(3, [(0, 1), (0, 2)])),
    ]
    path = tmp_path / "trees.tsv"
    assert EdgeListAdapter.write_fixture(path, entries) == 2
    assert list(EdgeListAdapter.read_fixture(path)) == entries


def test_read_edge_list_file(tmp_path):
    path = tmp_path / "k3.txt"
    path.write_text(K3_TEXT)
    assert EdgeListAdapter.read_edge_list_file(path).size == 3
