"""Immutable small simple graphs stored as per-vertex neighbour bit masks.

Vertices are ``0 .. order-1``; ``adj[v]`` has bit ``u`` set iff ``uv`` is an
edge.  Every operation returns a new graph.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphError

# one-byte graph6 size header limit
MAX_ORDER = 62


def bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class Graph:
    order: int
    adj: tuple[int, ...]
    edge_count: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise GraphError(f"order {self.order} outside 0..{MAX_ORDER}")
        adj = tuple(self.adj)
        if len(adj) != self.order:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.order) - 1
        total = 0
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(nb):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
            total += nb.bit_count()
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "edge_count", total // 2)

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edges()})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(i, j)`` pairs with ``i < j``, in ascending order."""
        return [(i, j) for i, nb in enumerate(self.adj) for j in bits(nb >> i + 1 << i + 1)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))


def graph_from_edges(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph; repeated pairs (in either orientation) collapse to one edge."""
    if not 0 <= order <= MAX_ORDER:
        raise GraphError(f"order {order} outside 0..{MAX_ORDER}")
    adj = [0] * order
    for e in edges:
        u, v = e
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge {(u, v)} out of range for order {order}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, tuple(adj))


def empty_graph(order: int = 0) -> Graph:
    return Graph(order, (0,) * order)


def path_graph(m: int) -> Graph:
    return graph_from_edges(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return graph_from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return graph_from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star_graph(leaves: int) -> Graph:
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Concatenate graphs; part ``i`` keeps its labels shifted by the earlier orders."""
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(nb << offset for nb in g.adj)
        offset += g.order
    return Graph(offset, tuple(adj))


def add_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    return graph_from_edges(g.order, g.edges() + [tuple(e) for e in edges])


def delete_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    """Remove edges, keeping every vertex."""
    adj = list(g.adj)
    for u, v in edges:
        if not adj[u] >> v & 1:
            raise GraphError(f"{(u, v)} is not an edge")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.order, tuple(adj))


def induced_subgraph(g: Graph, keep: int) -> Graph:
    """Subgraph induced by the vertex mask ``keep``, relabelled ascending."""
    kept = list(bits(keep & g.vertex_mask))
    index = {v: i for i, v in enumerate(kept)}
    adj = []
    for v in kept:
        nb = 0
        for u in bits(g.adj[v] & keep):
            nb |= 1 << index[u]
        adj.append(nb)
    return Graph(len(kept), tuple(adj))


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """``g - s``: survivors are relabelled contiguously in ascending original order."""
    drop = mask_of(s)
    if drop & ~g.vertex_mask:
        raise GraphError("deleted vertex set is not a subset of V(g)")
    return induced_subgraph(g, g.vertex_mask & ~drop)


def without_isolated(g: Graph) -> Graph:
    keep = mask_of(v for v, nb in enumerate(g.adj) if nb)
    if keep == g.vertex_mask:
        return g
    return induced_subgraph(g, keep)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph where old vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.order)):
        raise GraphError("relabelling is not a permutation")
    adj = [0] * g.order
    for v, nb in enumerate(g.adj):
        m = 0
        for u in bits(nb):
            m |= 1 << perm[u]
        adj[perm[v]] = m
    return Graph(g.order, tuple(adj))


def reach(adj: Sequence[int], start: int, alive: int) -> int:
    """Mask of vertices reachable from ``start`` inside the vertex mask ``alive``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(adj: Sequence[int], alive: int) -> list[int]:
    comps = []
    rest = alive
    while rest:
        v = (rest & -rest).bit_length() - 1
        c = reach(adj, v, alive)
        comps.append(c)
        rest &= ~c
    return comps


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components (isolated vertices included), ordered by smallest vertex."""
    return [frozenset(bits(c)) for c in component_masks(g.adj, g.vertex_mask)]


def is_connected(g: Graph) -> bool:
    return g.order <= 1 or reach(g.adj, 0, g.vertex_mask) == g.vertex_mask


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for a in range(g.order):
        higher = g.adj[a] >> a + 1 << a + 1
        for b in bits(higher):
            for c in bits(g.adj[b] & higher & ~((1 << b + 1) - 1)):
                out.append((a, b, c))
    return out


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for a forest."""
    best = math.inf
    for s in range(g.order):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for v in queue:
            if 2 * dist[v] + 1 >= best:
                break
            for u in bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def two_core(adj: Sequence[int], alive: int) -> int:
    """Vertex mask of the 2-core of the subgraph induced by ``alive``."""
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            if (adj[v] & alive).bit_count() < 2:
                alive &= ~(1 << v)
                changed = True
    return alive


def on_cycle_vertices(g: Graph) -> list[int]:
    """Vertices lying on at least one cycle (i.e. incident to a non-bridge edge)."""
    out = []
    full = g.vertex_mask
    for v in range(g.order):
        for u in bits(g.adj[v]):
            # uv lies on a cycle iff u still reaches v once the edge is removed
            adj = list(g.adj)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            if reach(adj, u, full) >> v & 1:
                out.append(v)
                break
    return out
