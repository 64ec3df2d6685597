import itertools
import random

from hypothesis import given, settings, strategies as st

from sizeramsey.canon import canonical_form, canonical_labelling, is_isomorphic, pair_orbit_representatives
from sizeramsey.graph import complete_graph, cycle_graph, disjoint_union, graph_from_edges, path_graph, relabel, \
    star_graph
from sizeramsey.oracles import brute_isomorphic, labeled_oracle_classes

from conftest import random_graph


def test_c4_relabelled():
    assert canonical_form(cycle_graph(4)) == canonical_form(relabel(cycle_graph(4), [0, 2, 1, 3]))


def test_p4_vs_star():
    assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))


def test_three_edge_classes():
    assert len({canonical_form(g) for g in labeled_oracle_classes(3)}) == 5


def test_labelling_is_consistent():
    g = graph_from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (4, 5)])
    lab = canonical_labelling(g)
    assert relabel(g, lab.perm) == lab.graph
    for gen in lab.generators:
        assert relabel(g, gen) == g


@given(st.integers(0, 10_000))
@settings(max_examples=150, deadline=None)
def test_orbit_constancy(seed):
    rng = random.Random(seed)
    g = random_graph(rng, max_order=11)
    code = canonical_form(g)
    for _ in range(4):
        p = list(range(g.order))
        rng.shuffle(p)
        assert canonical_form(relabel(g, p)) == code


def test_separation_against_brute_force(rng):
    # same edge count and degree sequence is where collisions would show up
    for _ in range(300):
        g, h = random_graph(rng, 7, 0.4), random_graph(rng, 7, 0.4)
        assert is_isomorphic(g, h) == brute_isomorphic(g, h)


def test_separation_on_regular_graphs():
    c6 = cycle_graph(6)
    two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3))
    assert not is_isomorphic(c6, two_triangles)
    c8 = cycle_graph(8)
    assert not is_isomorphic(c8, disjoint_union(cycle_graph(4), cycle_graph(4)))
    assert not is_isomorphic(c8, disjoint_union(cycle_graph(5), cycle_graph(3)))


def test_highly_symmetric_graphs_are_fast():
    for g in (complete_graph(8), star_graph(12), disjoint_union(*[path_graph(2)] * 9)):
        lab = canonical_labelling(g)
        assert relabel(g, lab.perm) == lab.graph


def test_all_permutations_small():
    g = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    codes = {canonical_form(relabel(g, p)) for p in itertools.permutations(range(5))}
    assert len(codes) == 1


def test_pair_orbits_of_c4():
    gens = canonical_labelling(cycle_graph(4)).generators
    non_edges = [(0, 2), (1, 3)]
    assert len(pair_orbit_representatives(4, non_edges, gens)) == 1
    # a fresh vertex joined to any cycle vertex: one orbit
    assert len(pair_orbit_representatives(4, [(v, 4) for v in range(4)], gens)) == 1
