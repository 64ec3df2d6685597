import random

import pytest

from sizeramsey.arrowing import BLUE_VIOLATION, COMPOSED, GENERIC, LEMMA_2K2, LEMMA_3K2, RED_VIOLATION, VALID, \
    Coloring, adversarial_coloring_connected, adversary_pivot, arrows, arrows_2k2_lemma, arrows_3k2_lemma, \
    arrows_generic, compose_union_arrowing, find_coloring, verify_coloring
from sizeramsey.enumeration import EnumConstraints, enumerate_graphs
from sizeramsey.errors import BudgetExceeded, PreconditionError
from sizeramsey.graph import add_edges, complete_graph, cycle_graph, disjoint_union, graph_from_edges, \
    path_graph, star_graph
from sizeramsey.oracles import brute_arrows, random_connected_graph
from sizeramsey.patterns import Cycle, Matching, Path, PathUnion, pattern_graph


def test_verify_coloring_examples():
    k3 = complete_graph(3)
    assert verify_coloring(k3, 2, Path(3), Coloring(k3, tuple(k3.edges()))) == VALID
    c7 = cycle_graph(7)
    assert verify_coloring(c7, 2, Path(6), Coloring(c7, ((0, 1), (0, 6)))) == BLUE_VIOLATION
    c4 = cycle_graph(4)
    assert verify_coloring(c4, 2, Path(3), Coloring(c4, ((0, 1), (2, 3)))) == RED_VIOLATION


def test_verify_coloring_rejects_foreign_edges():
    c4 = cycle_graph(4)
    with pytest.raises(ValueError):
        verify_coloring(c4, 2, Path(3), Coloring(c4, ((0, 2),)))
    with pytest.raises(ValueError):
        verify_coloring(c4, 2, Path(3), Coloring(path_graph(4), ()))


def test_generic_examples():
    assert arrows_generic(cycle_graph(4), 2, Path(3)).arrows
    v = arrows_generic(complete_graph(3), 2, Path(3))
    assert not v.arrows and verify_coloring(v.host, 2, Path(3), v.certificate) == VALID
    assert not arrows_generic(path_graph(4), 2, Path(3)).arrows


def test_generic_budget():
    with pytest.raises(BudgetExceeded):
        arrows_generic(cycle_graph(30), 2, Path(3))
    assert arrows_generic(cycle_graph(30), 2, Path(3), max_edges=30).arrows


def test_lemma2_examples():
    assert arrows_2k2_lemma(cycle_graph(7), PathUnion(2, 3)).arrows
    assert arrows_2k2_lemma(disjoint_union(*[path_graph(4)] * 3), PathUnion(2, 4)).arrows
    v = arrows_2k2_lemma(complete_graph(3), Path(3))
    assert not v.arrows and v.trace.kind == "triangle" and v.trace.vertices == (0, 1, 2)


def test_lemma2_triangle_deletes_edges_not_vertices():
    # K4 arrows (2K2, P3) although removing a triangle's vertices leaves one vertex
    assert brute_arrows(complete_graph(4), 2, path_graph(3))
    assert arrows_2k2_lemma(complete_graph(4), Path(3)).arrows


def test_lemma3_examples():
    assert arrows_3k2_lemma(cycle_graph(10), Path(3)).arrows
    v = arrows_3k2_lemma(cycle_graph(8), Path(7))
    assert not v.arrows and v.trace.kind == "pair"
    assert verify_coloring(v.host, 3, Path(7), v.certificate) == VALID
    assert arrows_3k2_lemma(path_graph(5), Path(3)).arrows is False


def test_lemma3_precondition():
    for g in (complete_graph(4), cycle_graph(5)):
        with pytest.raises(PreconditionError):
            arrows_3k2_lemma(g, Path(3))


def test_dispatch():
    assert arrows(cycle_graph(7), 2, PathUnion(2, 3)).method == LEMMA_2K2
    assert arrows(cycle_graph(10), 3, Path(3)).method == LEMMA_3K2
    assert arrows(complete_graph(4), 3, Path(3)).method == GENERIC
    assert arrows(cycle_graph(4), 2, Path(3), method="generic").method == GENERIC
    with pytest.raises(PreconditionError):
        arrows(cycle_graph(10), 4, Path(3), method="lemma")
    with pytest.raises(ValueError):
        arrows(cycle_graph(4), 2, Path(3), method="fast")


TARGETS = [Path(3), Path(4), PathUnion(2, 3), Cycle(3), Cycle(4), Matching(2)]


@pytest.mark.parametrize("h", TARGETS, ids=str)
def test_generic_and_lemma_match_brute_force(h):
    for e in range(1, 6):
        for g in enumerate_graphs(EnumConstraints(e)):
            expected = brute_arrows(g, 2, pattern_graph(h))
            assert arrows_generic(g, 2, h).arrows == expected
            assert arrows_2k2_lemma(g, h).arrows == expected


def test_generic_t3_matches_brute_force():
    for e in range(1, 7):
        for g in enumerate_graphs(EnumConstraints(e)):
            assert arrows_generic(g, 3, Path(3)).arrows == brute_arrows(g, 3, path_graph(3))


def test_lemma3_matches_generic_on_p6():
    for e in range(1, 9):
        for g in enumerate_graphs(EnumConstraints(e, girth_at_least=6)):
            assert arrows_3k2_lemma(g, Path(6)).arrows == arrows_generic(g, 3, Path(6)).arrows


def test_find_coloring_none_when_arrowing():
    assert find_coloring(cycle_graph(4), 2, Path(3)) is None
    c = find_coloring(cycle_graph(5), 3, Path(4))
    assert c is not None and verify_coloring(cycle_graph(5), 3, Path(4), c) == VALID


def test_adversary_examples():
    k3 = complete_graph(3)
    c = adversarial_coloring_connected(k3, 1, 3)
    assert len(c.red) == 2 and verify_coloring(k3, 2, Path(3), c) == VALID
    p4 = path_graph(4)
    assert adversary_pivot(p4) in (1, 2)
    assert verify_coloring(p4, 2, Path(3), adversarial_coloring_connected(p4, 1, 3)) == VALID
    with pytest.raises(PreconditionError):
        adversarial_coloring_connected(cycle_graph(7), 2, 3)
    with pytest.raises(PreconditionError):
        adversarial_coloring_connected(disjoint_union(path_graph(2), path_graph(2)), 1, 3)


@pytest.mark.parametrize("n, m", [(1, 3), (1, 4), (2, 3), (2, 4), (3, 3), (1, 6)])
def test_adversary_on_random_hosts(n, m):
    rng = random.Random(n * 100 + m)
    h = Path(m) if n == 1 else PathUnion(n, m)
    for _ in range(150):
        g = random_connected_graph(rng, rng.randint(1, n * m))
        assert verify_coloring(g, 2, h, adversarial_coloring_connected(g, n, m)) == VALID


def test_compose_union():
    c4 = cycle_graph(4)
    v = arrows(c4, 2, Path(3))
    out = compose_union_arrowing([(c4, 2, v), (c4, 2, v)])
    assert out.arrows and out.t == 4 and out.method == COMPOSED and out.host.edge_count == 8
    assert arrows_generic(out.host, 4, Path(3)).arrows
    assert compose_union_arrowing([(c4, 2, v)]) is v


def test_compose_rejects_bad_parts():
    c4 = cycle_graph(4)
    good = arrows(c4, 2, Path(3))
    bad = arrows(complete_graph(3), 2, Path(3))
    with pytest.raises(PreconditionError):
        compose_union_arrowing([(c4, 2, good), (complete_graph(3), 2, bad)])
    other = arrows(cycle_graph(5), 2, Path(4))
    with pytest.raises(PreconditionError):
        compose_union_arrowing([(c4, 2, good), (cycle_graph(5), 2, other)])
    with pytest.raises(PreconditionError):
        compose_union_arrowing([(c4, 3, good)])


def test_star_never_arrows_matching():
    g = star_graph(6)
    assert not arrows_generic(g, 2, Path(3)).arrows
    assert arrows_generic(add_edges(star_graph(3), [(1, 2)]), 1, Path(2)).arrows
