import math

import pytest

from sizeramsey.canon import is_isomorphic
from sizeramsey.errors import GraphError
from sizeramsey.graph import MAX_ORDER, Graph, add_edges, complete_graph, components, cycle_graph, delete_edges, \
    delete_vertices, disjoint_union, empty_graph, girth, graph_from_edges, is_connected, on_cycle_vertices, \
    path_graph, relabel, star_graph, triangles, two_core, without_isolated


def test_from_edges_examples():
    tri = graph_from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert tri.edge_count == 3 and tri == cycle_graph(3)
    p4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.edge_count == 3 and p4 == path_graph(4)
    assert graph_from_edges(2, [(0, 1), (1, 0)]).edge_count == 1


@pytest.mark.parametrize("order, edges", [
    (2, [(0, 0)]),
    (2, [(0, 2)]),
    (3, [(-1, 1)]),
    (MAX_ORDER + 1, []),
])
def test_from_edges_rejects(order, edges):
    with pytest.raises(GraphError):
        graph_from_edges(order, edges)


def test_graph_validates_symmetry():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(2, (0b1, 0))


def test_edges_sorted_and_degrees():
    g = star_graph(3)
    assert g.edges() == [(0, 1), (0, 2), (0, 3)]
    assert g.degrees() == [3, 1, 1, 1]
    assert g.neighbors(0) == [1, 2, 3]


def test_delete_vertices():
    assert delete_vertices(cycle_graph(5), [4]) == path_graph(4)
    assert is_isomorphic(delete_vertices(cycle_graph(5), [2]), path_graph(4))
    assert is_isomorphic(delete_vertices(cycle_graph(7), [3, 4]), path_graph(5))
    assert delete_vertices(cycle_graph(4), []) == cycle_graph(4)
    with pytest.raises(GraphError):
        delete_vertices(cycle_graph(4), [4])


def test_delete_vertices_relabels_in_order():
    g = graph_from_edges(4, [(0, 3), (1, 3)])
    assert delete_vertices(g, [2]).edges() == [(0, 2), (1, 2)]


def test_delete_edges():
    g = delete_edges(cycle_graph(4), [(3, 0)])
    assert g == path_graph(4)
    with pytest.raises(GraphError):
        delete_edges(g, [(0, 2)])


def test_triangles():
    assert triangles(cycle_graph(3)) == [(0, 1, 2)]
    assert triangles(cycle_graph(6)) == []
    assert len(triangles(complete_graph(4))) == 4


def test_girth():
    assert girth(cycle_graph(5)) == 5
    assert girth(path_graph(7)) == math.inf
    assert girth(complete_graph(4)) == 3
    assert girth(disjoint_union(cycle_graph(7), cycle_graph(4))) == 4


def test_components():
    assert len(components(disjoint_union(path_graph(3), path_graph(2)))) == 2
    assert len(components(cycle_graph(6))) == 1
    assert components(empty_graph(3)) == [frozenset({0}), frozenset({1}), frozenset({2})]
    assert is_connected(cycle_graph(6)) and not is_connected(empty_graph(2))
    assert is_connected(empty_graph(0)) and is_connected(empty_graph(1))


def test_relabel_roundtrip():
    g = path_graph(4)
    h = relabel(g, [2, 0, 3, 1])
    assert h.edges() == [(0, 2), (0, 3), (1, 3)]
    inverse = [0] * 4
    for old, new in enumerate([2, 0, 3, 1]):
        inverse[new] = old
    assert relabel(h, inverse) == g
    with pytest.raises(GraphError):
        relabel(g, [0, 0, 1, 2])


def test_without_isolated_and_union():
    g = disjoint_union(empty_graph(2), path_graph(3))
    assert g.order == 5
    assert without_isolated(g) == path_graph(3)
    assert add_edges(path_graph(3), [(2, 0)]) == cycle_graph(3)


def test_cycle_structure():
    # triangle with a pendant path
    g = graph_from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    assert on_cycle_vertices(g) == [0, 1, 2]
    assert two_core(g.adj, g.vertex_mask) == 0b111
    assert on_cycle_vertices(path_graph(5)) == []
