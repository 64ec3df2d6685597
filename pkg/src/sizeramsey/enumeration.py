"""Isomorph-free generation of graphs by edge count (no isolated vertices).

Graphs grow one edge at a time.  The parent of a graph is obtained by deleting
its canonical last edge (the edge between the two highest canonical labels)
and dropping any vertex left isolated, so every isomorphism class has exactly
one parent class.  A child produced from a parent is kept only if its own
canonical parent is that parent; children of the same parent are further
de-duplicated locally.  Nothing beyond one parent's children is held in
memory.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .canon import CanonicalCode, canonical_labelling, pair_orbit_representatives
from .errors import BudgetExceeded
from .graph import MAX_ORDER, Graph, bits, component_masks, delete_edges, girth, induced_subgraph, is_connected, \
    without_isolated
from .patterns import Pattern, contains, normalize

DEFAULT_EDGE_LIMIT = 9
OVERRIDE_EDGE_LIMIT = 11


@dataclass(frozen=True)
class EnumConstraints:
    edges: int
    connected: bool = False
    min_degree: int | None = None
    max_order: int | None = None
    girth_at_least: int | None = None
    # every component must contain this pattern; only sound where a
    # component-reduction argument applies (see ramsey.search)
    component_contains: Pattern | None = None

    def __post_init__(self):
        if self.edges < 0:
            raise ValueError("edge count must be non-negative")
        if self.max_order is not None and self.max_order > 2 * self.edges:
            object.__setattr__(self, "max_order", 2 * self.edges)
        if self.component_contains is not None:
            object.__setattr__(self, "component_contains", normalize(self.component_contains))

    def accepts(self, g: Graph) -> bool:
        """Emission-time check of every constraint."""
        if g.edge_count != self.edges:
            return False
        if self.connected and not is_connected(g):
            return False
        if self.min_degree is not None and min(g.degrees(), default=0) < self.min_degree:
            return False
        if self.max_order is not None and g.order > self.max_order:
            return False
        if self.girth_at_least is not None and girth(g) < self.girth_at_least:
            return False
        if self.component_contains is not None:
            for comp in component_masks(g.adj, g.vertex_mask):
                if not contains(induced_subgraph(g, comp), self.component_contains):
                    return False
        return True

    def describe(self) -> dict:
        return {
            "edges": self.edges,
            "connected": self.connected,
            "min_degree": self.min_degree,
            "max_order": self.max_order,
            "girth_at_least": self.girth_at_least,
            "component_contains": None if self.component_contains is None else str(self.component_contains),
        }


def _hereditary_ok(g: Graph, c: EnumConstraints) -> bool:
    """Constraints inherited by every descendant in the generation tree."""
    if c.max_order is not None and g.order > c.max_order:
        return False
    if c.girth_at_least is not None and girth(g) < c.girth_at_least:
        return False
    return True


def _canonical_parent(lab) -> Graph:
    g = lab.graph
    last = g.order - 1
    partner = g.adj[last].bit_length() - 1
    return without_isolated(delete_edges(g, [(partner, last)]))


def _conjugate(generators, perm):
    """Express automorphisms of a graph in the labels of its canonical relabelling."""
    out = []
    for gam in generators:
        new = [0] * len(perm)
        for v, img in enumerate(gam):
            new[perm[v]] = perm[img]
        out.append(tuple(new))
    return tuple(out)


def children(g: Graph, code: CanonicalCode, generators) -> list[tuple[Graph, CanonicalCode, tuple]]:
    """Canonical children of ``g``: one per isomorphism class, each with its labelling data."""
    n = g.order
    candidates = [(i, j) for i in range(n) for j in bits(~g.adj[i] & ((1 << n) - 1)) if i < j]
    candidates += [(i, n) for i in range(n)]
    candidates.append((n, n + 1))
    out = {}
    for a, b in pair_orbit_representatives(n, candidates, generators):
        order = max(n, b + 1)
        if order > MAX_ORDER:
            continue
        adj = list(g.adj) + [0] * (order - n)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
        child = Graph(order, tuple(adj))
        lab = canonical_labelling(child)
        ccode = lab.code
        if ccode in out:
            continue
        # the new edge is the canonical last edge, or its removal is isomorphic to it
        pa, pb = lab.perm[a], lab.perm[b]
        last = child.order - 1
        if max(pa, pb) == last and min(pa, pb) == lab.graph.adj[last].bit_length() - 1:
            ok = True
        else:
            ok = canonical_labelling(_canonical_parent(lab)).code == code
        if ok:
            out[ccode] = (lab.graph, ccode, _conjugate(lab.generators, lab.perm))
    return [out[k] for k in sorted(out)]


def _subtree(root: Graph, target: int, c: EnumConstraints) -> list[tuple[CanonicalCode, Graph]]:
    found = []
    lab = canonical_labelling(root)
    stack = [(lab.graph, lab.code, _conjugate(lab.generators, lab.perm))]
    while stack:
        g, code, gens = stack.pop()
        if g.edge_count == target:
            if c.accepts(g):
                found.append((code, g))
            continue
        for child in reversed(children(g, code, gens)):
            if _hereditary_ok(child[0], c):
                stack.append(child)
    return found


def _check_budget(c: EnumConstraints, limit: int | None):
    limit = DEFAULT_EDGE_LIMIT if limit is None else limit
    if limit > OVERRIDE_EDGE_LIMIT:
        raise BudgetExceeded(f"edge limit {limit} exceeds the hard cap {OVERRIDE_EDGE_LIMIT}",
                             limit=OVERRIDE_EDGE_LIMIT, requested=limit)
    if c.edges > limit:
        raise BudgetExceeded(
            f"enumeration of {c.edges}-edge graphs exceeds the edge budget {limit}"
            + ("" if limit >= OVERRIDE_EDGE_LIMIT else f" (override allows up to {OVERRIDE_EDGE_LIMIT})"),
            limit=limit, requested=c.edges)


def _split_nodes(target: int, depth: int, c: EnumConstraints) -> list[Graph]:
    level = [(Graph(0, ()), canonical_labelling(Graph(0, ())).code, ())]
    for _ in range(min(depth, target)):
        nxt = []
        for g, code, gens in level:
            nxt.extend(ch for ch in children(g, code, gens) if _hereditary_ok(ch[0], c))
        level = nxt
    return [g for g, _, _ in level]


def enumerate_graphs(c: EnumConstraints, *, limit: int | None = None, workers: int = 1,
                     split_depth: int = 2) -> Iterator[Graph]:
    """One graph per isomorphism class satisfying ``c``, in canonical-code order.

    Each graph is returned in its canonical labelling.  With ``workers > 1``
    the generation tree is cut at ``split_depth`` and the subtrees are run in
    separate processes; the merged output is identical.
    """
    _check_budget(c, limit)
    if c.edges == 0:
        g = Graph(0, ())
        if c.accepts(g):
            yield g
        return
    roots = _split_nodes(c.edges, split_depth, c)
    if workers > 1 and len(roots) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_subtree, roots, [c.edges] * len(roots), [c] * len(roots)))
    else:
        parts = [_subtree(r, c.edges, c) for r in roots]
    found = [item for part in parts for item in part]
    found.sort(key=lambda item: item[0])
    for _, g in found:
        yield g


def count_graphs(c: EnumConstraints, **kwargs) -> int:
    return sum(1 for _ in enumerate_graphs(c, **kwargs))


def default_workers() -> int:
    env = os.environ.get("ARROW_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1
