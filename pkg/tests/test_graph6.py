import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from sizeramsey.errors import Graph6Error
from sizeramsey.graph import cycle_graph, girth, graph_from_edges, path_graph
from sizeramsey.graph6 import decode_graph6, encode_graph6, parse_graph_arg, read_graph6_file, \
    write_graph6_file


@st.composite
def graphs(draw, max_order=20):
    n = draw(st.integers(0, max_order))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graph_from_edges(n, chosen)


def test_k2():
    assert encode_graph6(path_graph(2)) == "A_"
    assert decode_graph6("A_") == path_graph(2)


def test_c5_decodes_to_girth_5():
    g = decode_graph6(encode_graph6(cycle_graph(5)))
    assert g.edge_count == 5 and girth(g) == 5


def test_c6_string():
    assert encode_graph6(cycle_graph(6)) == "EhEG"


@given(graphs())
@settings(max_examples=200, deadline=None)
def test_roundtrip(g):
    assert decode_graph6(encode_graph6(g)) == g


@given(graphs(max_order=40))
@settings(max_examples=100, deadline=None)
def test_matches_networkx_encoder(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.order))
    ref.add_edges_from(g.edges())
    expected = nx.to_graph6_bytes(ref, header=False).decode().strip()
    assert encode_graph6(g) == expected


@pytest.mark.parametrize("bad", ["F?qb", "", "A", "A_x", "Ao", "~??", "\x7f"])
def test_malformed(bad):
    with pytest.raises(Graph6Error):
        decode_graph6(bad)


def test_header_accepted():
    assert decode_graph6(">>graph6<<A_") == path_graph(2)


def test_file_roundtrip(tmp_path):
    rng = random.Random(3)
    gs = [graph_from_edges(6, rng.sample([(a, b) for a in range(6) for b in range(a + 1, 6)], 5))
          for _ in range(4)]
    path = tmp_path / "g.g6"
    assert write_graph6_file(path, gs) == 4
    assert read_graph6_file(path) == gs
    assert parse_graph_arg(f"@{path}") == gs
    assert parse_graph_arg("A_") == [path_graph(2)]
