import pytest

from sizeramsey.canon import canonical_form, is_isomorphic
from sizeramsey.enumeration import EnumConstraints, count_graphs, enumerate_graphs
from sizeramsey.errors import BudgetExceeded
from sizeramsey.graph import Graph, complete_graph, cycle_graph, disjoint_union, girth, is_connected, path_graph, \
    star_graph
from sizeramsey.oracles import brute_isomorphic, labeled_oracle_classes
from sizeramsey.patterns import Path, contains

# graphs without isolated vertices by number of edges, all and connected
ALL = [1, 1, 2, 5, 11, 26, 68, 177, 497]
CONNECTED = [1, 1, 1, 3, 5, 12, 30, 79, 227]


def test_small_cases():
    assert list(enumerate_graphs(EnumConstraints(0))) == [Graph(0, ())]
    assert list(enumerate_graphs(EnumConstraints(1))) == [path_graph(2)]


def test_three_edges():
    expected = [complete_graph(3), path_graph(4), star_graph(3),
                disjoint_union(path_graph(3), path_graph(2)), disjoint_union(*[path_graph(2)] * 3)]
    got = list(enumerate_graphs(EnumConstraints(3)))
    assert sorted(canonical_form(g) for g in got) == sorted(canonical_form(g) for g in expected)
    conn = list(enumerate_graphs(EnumConstraints(3, connected=True)))
    assert len(conn) == 3 and all(is_connected(g) for g in conn)


@pytest.mark.parametrize("e", range(len(ALL)))
def test_counts(e):
    assert count_graphs(EnumConstraints(e)) == ALL[e]
    assert count_graphs(EnumConstraints(e, connected=True)) == CONNECTED[e]


@pytest.mark.parametrize("e", range(6))
def test_matches_labeled_oracle(e):
    ours = list(enumerate_graphs(EnumConstraints(e)))
    oracle = labeled_oracle_classes(e)
    assert len(ours) == len(oracle)
    for r in oracle:
        assert sum(brute_isomorphic(g, r) for g in ours) == 1


def test_output_is_sorted_and_canonical():
    gs = list(enumerate_graphs(EnumConstraints(6)))
    codes = [canonical_form(g) for g in gs]
    assert codes == sorted(codes) and len(set(codes)) == len(codes)


def test_constraints_equal_filtering():
    full = list(enumerate_graphs(EnumConstraints(7)))
    cases = [
        (EnumConstraints(7, girth_at_least=4), lambda g: girth(g) >= 4),
        (EnumConstraints(7, min_degree=2), lambda g: min(g.degrees()) >= 2),
        (EnumConstraints(7, max_order=7), lambda g: g.order <= 7),
        (EnumConstraints(7, connected=True, girth_at_least=5), lambda g: is_connected(g) and girth(g) >= 5),
    ]
    for c, pred in cases:
        got = list(enumerate_graphs(c))
        want = [g for g in full if pred(g)]
        assert [canonical_form(g) for g in got] == [canonical_form(g) for g in want]


def test_component_constraint():
    c = EnumConstraints(6, component_contains=Path(3))
    for g in enumerate_graphs(c):
        from sizeramsey.graph import components, induced_subgraph, mask_of
        for comp in components(g):
            assert contains(induced_subgraph(g, mask_of(comp)), Path(3))


def test_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_graphs(EnumConstraints(10)))
    with pytest.raises(BudgetExceeded):
        list(enumerate_graphs(EnumConstraints(5), limit=12))
    # within the override cap
    assert count_graphs(EnumConstraints(10, connected=True, girth_at_least=5), limit=10) > 0


def test_parallel_identical():
    c = EnumConstraints(6, connected=True)
    assert list(enumerate_graphs(c, workers=2)) == list(enumerate_graphs(c))


def test_cycle_present():
    gs = list(enumerate_graphs(EnumConstraints(6, min_degree=2, connected=True)))
    assert any(is_isomorphic(g, cycle_graph(6)) for g in gs)
