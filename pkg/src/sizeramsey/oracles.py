"""Slow, independent reference implementations used to cross-check the fast code.

Nothing here shares logic with the production deciders: isomorphism is a
plain bijection search, containment a plain injective embedding search, and
arrowing a loop over every red/blue colouring.
"""
from __future__ import annotations

import itertools
import random
from typing import Iterator

from .graph import Graph, graph_from_edges


def _bfs_order(g: Graph) -> list[int]:
    """Vertices ordered so that each one (after a component's first) has an earlier neighbour."""
    order, seen = [], set()
    for s in sorted(range(g.order), key=lambda v: -g.degree(v)):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        for v in queue:
            order.append(v)
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return order


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking search for an adjacency-preserving bijection."""
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    order = _bfs_order(g)
    image: dict[int, int] = {}
    used = set()

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for w in range(h.order):
            if w in used or h.degree(w) != g.degree(v):
                continue
            if any(g.has_edge(v, u) != h.has_edge(w, x) for u, x in image.items()):
                continue
            image[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del image[v]
            used.discard(w)
        return False

    return extend(0)


def embeds(host: Graph, pattern: Graph) -> bool:
    """Is there an injective map of ``pattern`` into ``host`` sending edges to edges?"""
    if pattern.order > host.order or pattern.edge_count > host.edge_count:
        return False
    order = _bfs_order(pattern)
    image: dict[int, int] = {}

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for w in range(host.order):
            if w in image.values():
                continue
            if all(host.has_edge(w, image[u]) for u in pattern.neighbors(v) if u in image):
                image[v] = w
                if extend(i + 1):
                    return True
                del image[v]
        return False

    return extend(0)


def brute_arrows(f: Graph, t: int, pattern: Graph) -> bool:
    """Try all ``2^e`` colourings; ``pattern`` is the blue target as a graph."""
    edges = f.edges()
    red_target = graph_from_edges(2 * t, [(2 * i, 2 * i + 1) for i in range(t)])
    for mask in range(1 << len(edges)):
        red = [e for i, e in enumerate(edges) if mask >> i & 1]
        blue = [e for i, e in enumerate(edges) if not mask >> i & 1]
        if embeds(graph_from_edges(f.order, red), red_target):
            continue
        if embeds(graph_from_edges(f.order, blue), pattern):
            continue
        return False
    return True


def _labeled_graphs(e: int, v: int) -> Iterator[Graph]:
    """Edge sets of size ``e`` on ``0..v-1`` touching every vertex, with
    degrees non-increasing in the label (every class has such a labelling)."""
    pairs = list(itertools.combinations(range(v), 2))

    def rec(start, chosen, deg):
        uncovered = sum(1 for d in deg if d == 0)
        left = e - len(chosen)
        if 2 * left < uncovered:
            return
        if left == 0:
            if all(deg[i] >= deg[i + 1] for i in range(v - 1)):
                yield graph_from_edges(v, chosen)
            return
        for k in range(start, len(pairs)):
            a, b = pairs[k]
            deg[a] += 1
            deg[b] += 1
            chosen.append(pairs[k])
            yield from rec(k + 1, chosen, deg)
            chosen.pop()
            deg[a] -= 1
            deg[b] -= 1

    yield from rec(0, [], [0] * v)


def labeled_oracle_classes(e: int) -> list[Graph]:
    """One representative per isomorphism class of graphs with ``e`` edges and
    no isolated vertices, from labeled generation plus pairwise isomorphism tests."""
    if e == 0:
        return [Graph(0, ())]
    reps: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    for v in range(2, 2 * e + 1):
        for g in _labeled_graphs(e, v):
            key = (v, tuple(sorted(g.degrees())))
            bucket = buckets.setdefault(key, [])
            if not any(brute_isomorphic(g, r) for r in bucket):
                bucket.append(g)
                reps.append(g)
    return reps


def random_connected_graph(rng: random.Random, edges: int) -> Graph:
    """A random connected graph with exactly ``edges`` edges and no isolated vertices."""
    lo = 2
    while lo * (lo - 1) // 2 < edges:
        lo += 1
    v = rng.randint(lo, edges + 1)
    tree = [(rng.randrange(i), i) for i in range(1, v)]
    present = {tuple(sorted(p)) for p in tree}
    rest = [p for p in itertools.combinations(range(v), 2) if p not in present]
    extra = rng.sample(rest, edges - len(tree))
    perm = list(range(v))
    rng.shuffle(perm)
    return graph_from_edges(v, [(perm[a], perm[b]) for a, b in list(present) + extra])
