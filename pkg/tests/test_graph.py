import networkx as nx
import pytest
from hypothesis import given, settings

from fraclocdim.graph import (
    DisconnectedGraphError, Graph, GraphError, VertexSet, build_graph, delete_vertex, diameter,
    every_vertex_has_true_twin, is_bipartite, is_connected, is_cut_vertex, load_graph,
    parse_edge_list, parse_json, to_edge_list, to_json, true_twins,
)
from fraclocdim.families import complete, cycle, path, petersen, star

from strategies import graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_vertex_set_algebra():
    a = VertexSet.of(6, [0, 2, 4])
    b = VertexSet.of(6, [2, 3])
    assert (a | b).to_list() == [0, 2, 3, 4]
    assert (a & b).to_list() == [2]
    assert (a - b).to_list() == [0, 4]
    assert a.complement().to_list() == [1, 3, 5]
    assert 2 in a and 3 not in a and 9 not in a
    assert len(a) == 3
    assert VertexSet.of(6, [2]).issubset(a)
    assert VertexSet.full(3).to_list() == [0, 1, 2]


def test_vertex_set_rejects_out_of_range():
    with pytest.raises(GraphError):
        VertexSet.of(3, [3])


def test_build_graph_validation():
    with pytest.raises(GraphError, match="self-loop"):
        build_graph(3, [(1, 1)])
    with pytest.raises(GraphError, match="out of range"):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(0, [])
    with pytest.raises(GraphError, match="asymmetric"):
        Graph(2, (0b10, 0))


def test_duplicate_edges_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert g.num_edges == 2
    assert g.edges() == [(0, 1), (1, 2)]


def test_distances_on_cycle():
    d = cycle(6).distances()
    assert d[0] == [0, 1, 2, 3, 2, 1]
    assert diameter(cycle(7)) == 3


def test_disconnected_distance_error_names_pair():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError) as info:
        g.distances()
    assert (info.value.u, info.value.v) == (0, 2)
    assert not is_connected(g)


def test_single_vertex_graph():
    g = build_graph(1, [])
    assert is_connected(g)
    assert g.distances() == [[0]]


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=8, connected=False))
def test_structure_matches_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == nx.is_connected(h)
    assert is_bipartite(g) == nx.is_bipartite(h)
    if is_connected(g):
        ref = dict(nx.all_pairs_shortest_path_length(h))
        assert g.distances() == [[ref[u][v] for v in range(g.n)] for u in range(g.n)]


def test_true_twins():
    k4 = complete(4)
    assert true_twins(k4, 0, 3)
    assert not true_twins(path(3), 0, 2)  # false twins only
    assert every_vertex_has_true_twin(k4)
    assert not every_vertex_has_true_twin(cycle(5))
    with pytest.raises(GraphError):
        true_twins(k4, 1, 1)


def test_delete_vertex_compacts_indices():
    g = delete_vertex(path(4), 1)
    assert g.n == 3
    assert g.edges() == [(1, 2)]
    assert g.name == "path(4)-1"
    assert is_cut_vertex(star(4), 0)
    assert not is_cut_vertex(star(4), 1)
    assert not is_cut_vertex(petersen(), 0)


@settings(max_examples=50, deadline=None)
@given(graphs(min_n=1, max_n=9, connected=False))
def test_file_formats_round_trip(g):
    g = g.renamed("sample")
    for text in (to_edge_list(g), to_json(g)):
        back = load_graph(text)
        assert back == g
        assert back.name == "sample"


def test_edge_list_comments_and_errors():
    g = parse_edge_list("# triangle\n3 3\n0 1\n1 2  # spoke\n0 2\n")
    assert g.name == "triangle" and g.num_edges == 3
    with pytest.raises(GraphError, match="declares"):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphError, match="empty"):
        parse_edge_list("# nothing\n")
    with pytest.raises(GraphError, match="malformed"):
        parse_edge_list("3 x\n")
    with pytest.raises(GraphError, match="malformed"):
        parse_json('{"n": 3}')


def test_graph_equality_ignores_name():
    assert cycle(5).renamed("a") == cycle(5).renamed("b")
    assert hash(cycle(5).renamed("a")) == hash(cycle(5))
    assert cycle(5) != path(5)
