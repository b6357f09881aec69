import networkx as nx
import pytest

from fraclocdim.families import (
    FamilyParseError, FamilySpec, cartesian_product, complete, complete_multipartite, cycle, fan,
    family, generalized_lexicographic, hypercube, join, layer_index, lollipop, make_family,
    parse_family_string, path, petersen, star, strong_product,
)
from fraclocdim.graph import GraphError, build_graph, is_connected

from test_graph import to_nx


@pytest.mark.parametrize("g,n,m", [
    (path(5), 5, 4),
    (cycle(7), 7, 7),
    (complete(6), 6, 15),
    (complete_multipartite(2, 3, 4), 9, 26),
    (star(4), 5, 4),
    (fan(5), 6, 9),
    (lollipop(4, 3), 7, 9),
    (hypercube(3), 8, 12),
    (petersen(), 10, 15),
])
def test_orders_and_sizes(g, n, m):
    assert (g.n, g.num_edges) == (n, m)
    assert is_connected(g)


def test_canonical_orders():
    f = fan(4)
    assert f.degree(4) == 4  # hub last
    assert f.has_edge(0, 1) and not f.has_edge(0, 2)
    lp = lollipop(4, 3)
    assert lp.has_edge(3, 4) and lp.degree(6) == 1
    assert star(3).degree(0) == 3
    assert hypercube(3).has_edge(0b101, 0b100)


def test_petersen_is_the_petersen_graph():
    assert nx.is_isomorphic(to_nx(petersen()), nx.petersen_graph())


def test_products_match_networkx():
    g, h = cycle(5), path(3)
    assert nx.is_isomorphic(to_nx(strong_product(g, h)), nx.strong_product(to_nx(g), to_nx(h)))
    assert nx.is_isomorphic(to_nx(cartesian_product(g, h)), nx.cartesian_product(to_nx(g), to_nx(h)))


def test_product_vertex_index():
    p = cartesian_product(path(2), path(3))
    assert layer_index(1, 2, 3) == 5
    assert p.has_edge(layer_index(0, 2, 3), layer_index(1, 2, 3))
    assert not p.has_edge(layer_index(0, 1, 3), layer_index(1, 2, 3))
    s = strong_product(path(2), path(3))
    assert s.has_edge(layer_index(0, 1, 3), layer_index(1, 2, 3))


def test_products_reject_disconnected_operands():
    two = build_graph(2, [])
    with pytest.raises(GraphError, match="not connected"):
        strong_product(two, path(2))


def test_join_of_cliques_is_a_clique():
    assert join(complete(3), complete(4)) == complete(7)


def test_fan_is_path_joined_with_hub():
    assert fan(5) == join(path(5), complete(1))
    assert nx.is_isomorphic(to_nx(fan(5)), to_nx(join(complete(1), path(5))))


def test_generalized_lexicographic():
    g = generalized_lexicographic(path(3), [complete(2), complete(1), complete(2)])
    assert g.n == 5
    assert g.has_edge(0, 1) and g.has_edge(1, 2) and not g.has_edge(0, 3)
    with pytest.raises(GraphError, match="one fibre per vertex"):
        generalized_lexicographic(path(3), [complete(2)])


@pytest.mark.parametrize("text,canonical", [
    ("petersen()", "petersen"),
    ("petersen", "petersen"),
    ("lollipop(4,3)", "lollipop(4,3)"),
    ("strong(complete(3),complete(4))", "strong(complete(3),complete(4))"),
    ("cartesian_product( complete(2) , cycle(5) )", "cartesian(complete(2),cycle(5))"),
    ("complete_multipartite(2,3)", "multipartite(2,3)"),
    ("lex(path(2),complete(2),complete(3))", "lex(path(2),complete(2),complete(3))"),
])
def test_parse_family_string(text, canonical):
    spec = parse_family_string(text)
    assert str(spec) == canonical
    assert parse_family_string(str(spec)) == spec
    assert make_family(spec).name == canonical


@pytest.mark.parametrize("text,pos", [
    ("cycle(", 6),
    ("cycle(5", 7),
    ("hexagon(3)", 0),
    ("cycle(5))", 8),
    ("cycle(2)", 0),
    ("strong(cycle(5),3)", 0),
    ("5", 0),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(FamilyParseError) as info:
        parse_family_string(text)
    assert info.value.pos == pos


def test_spec_validation():
    with pytest.raises(GraphError):
        FamilySpec("lollipop", (2, 3))
    with pytest.raises(GraphError):
        FamilySpec("complete_multipartite", (3,))
    assert FamilySpec("strong", (FamilySpec("path", (2,)), FamilySpec("path", (2,)))).kind == "strong_product"


def test_family_shorthand():
    assert family("cartesian(complete(2),cycle(5))").n == 10
