import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from sizeramsey.errors import PatternSyntaxError
from sizeramsey.graph import add_edges, complete_graph, cycle_graph, delete_vertices, disjoint_union, \
    graph_from_edges, path_graph, star_graph
from sizeramsey.oracles import embeds
from sizeramsey.patterns import Cycle, Matching, Path, PathUnion, contains, contains_cycle_at_least, \
    contains_cycle_exact, contains_path, contains_path_union, max_matching_size, normalize, parse_pattern, \
    pattern_graph

from conftest import random_graph


@pytest.mark.parametrize("text, expected", [
    ("M2", Matching(2)),
    ("2P5", PathUnion(2, 5)),
    ("1P7", Path(7)),
    ("P3", Path(3)),
    ("C6", Cycle(6)),
    ("M1", Path(2)),
    (" P4 ", Path(4)),
])
def test_parse(text, expected):
    assert parse_pattern(text) == expected


@pytest.mark.parametrize("text", ["", "P", "Q3", "C2", "M0", "0P3", "2P0", "P-1", "2C3", "p3"])
def test_parse_rejects(text):
    with pytest.raises(PatternSyntaxError):
        parse_pattern(text)


def test_str_roundtrip():
    for p in (Matching(3), Path(5), Cycle(7), PathUnion(3, 4)):
        assert parse_pattern(str(p)) == p


def test_matching_number_examples():
    assert max_matching_size(path_graph(4)) == 2
    assert max_matching_size(complete_graph(3)) == 1
    assert max_matching_size(cycle_graph(7)) == 3
    assert max_matching_size(star_graph(5)) == 1


def test_matching_against_networkx(rng):
    for _ in range(200):
        g = random_graph(rng, 12)
        ref = nx.Graph(g.edges())
        assert max_matching_size(g) == len(nx.max_weight_matching(ref, maxcardinality=True))


def test_path_examples():
    assert contains_path(delete_vertices(cycle_graph(7), [0]), 6)
    assert not contains_path(star_graph(4), 4)
    assert contains_path(add_edges(cycle_graph(6), [(0, 3)]), 6)
    assert contains_path(graph_from_edges(1, []), 1)


def test_cycle_examples():
    assert contains_cycle_exact(cycle_graph(7), 7)
    assert not contains_cycle_exact(cycle_graph(7), 6)
    assert contains_cycle_exact(complete_graph(4), 3) and contains_cycle_exact(complete_graph(4), 4)
    assert contains_cycle_exact(add_edges(cycle_graph(6), [(0, 2)]), 5)
    assert contains_cycle_at_least(cycle_graph(10), 10)
    assert not contains_cycle_at_least(cycle_graph(10), 11)
    assert not contains_cycle_at_least(path_graph(6), 3)


def test_theta_graph():
    # two branch vertices joined by internally disjoint paths of 3, 4 and 5 edges
    edges, nxt = [], 2
    for length in (3, 4, 5):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
        edges.append((prev, 1))
    g = graph_from_edges(nxt, edges)
    assert contains_cycle_at_least(g, 9)
    assert contains_cycle_exact(g, 9) and not contains_cycle_exact(g, 10)


def test_path_union_examples():
    assert contains_path_union(path_graph(7), 2, 3)
    assert not contains_path_union(path_graph(5), 2, 3)
    g = disjoint_union(*[path_graph(4)] * 4)
    for v in range(g.order):
        assert contains_path_union(delete_vertices(g, [v]), 3, 4)


def test_contains_dispatch():
    assert contains(cycle_graph(4), Matching(2))
    assert contains(cycle_graph(4), Cycle(4))
    assert contains(disjoint_union(path_graph(3), path_graph(3)), PathUnion(2, 3))


PATTERNS = [Matching(2), Matching(3), Path(3), Path(4), Path(5), Path(6), Cycle(3), Cycle(4), Cycle(5),
            PathUnion(2, 2), PathUnion(2, 3), PathUnion(3, 2), PathUnion(2, 4)]


@given(st.integers(0, 100_000), st.sampled_from(PATTERNS))
@settings(max_examples=400, deadline=None)
def test_containment_matches_embedding_oracle(seed, p):
    g = random_graph(random.Random(seed), 8)
    assert contains(g, p) == embeds(g, pattern_graph(normalize(p)))
