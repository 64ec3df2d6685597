"""Target patterns and exact subgraph-containment oracles.

Patterns are written ``M<t>`` (matching ``tK2``), ``P<m>`` (path on ``m``
vertices), ``C<n>`` (cycle on exactly ``n`` vertices) and ``<n>P<m>`` (``n``
disjoint copies of ``P_m``).

The oracles work on raw adjacency masks restricted to an ``alive`` vertex
mask so that the search code can call them without building graphs.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import PatternSyntaxError
from .graph import Graph, bits, component_masks, disjoint_union, graph_from_edges, path_graph, \
    reach, two_core, cycle_graph


@dataclass(frozen=True)
class Matching:
    t: int

    def __str__(self):
        return f"M{self.t}"


@dataclass(frozen=True)
class Path:
    m: int

    def __str__(self):
        return f"P{self.m}"


@dataclass(frozen=True)
class Cycle:
    n: int

    def __str__(self):
        return f"C{self.n}"


@dataclass(frozen=True)
class PathUnion:
    n: int
    m: int

    def __str__(self):
        return f"{self.n}P{self.m}"


Pattern = Matching | Path | Cycle | PathUnion

_GRAMMAR = re.compile(r"^(?:M(?P<t>\d+)|P(?P<m>\d+)|C(?P<c>\d+)|(?P<n>\d+)P(?P<pm>\d+))$")


def normalize(p: Pattern) -> Pattern:
    match p:
        case Matching(t) if t < 1:
            raise PatternSyntaxError("a matching needs t >= 1")
        case Matching(1):
            return Path(2)
        case Path(m) if m < 1:
            raise PatternSyntaxError("a path needs m >= 1")
        case Cycle(n) if n < 3:
            raise PatternSyntaxError(f"C{n}: a cycle needs at least 3 vertices")
        case PathUnion(n, m) if n < 1 or m < 1:
            raise PatternSyntaxError("a path union needs n, m >= 1")
        case PathUnion(1, m):
            return Path(m)
    return p


def parse_pattern(text: str) -> Pattern:
    hit = _GRAMMAR.match(text.strip())
    if hit is None:
        raise PatternSyntaxError(f"cannot parse pattern {text!r}; expected M<t>, P<m>, C<n> or <n>P<m>")
    g = hit.groupdict()
    if g["t"] is not None:
        p = Matching(int(g["t"]))
    elif g["m"] is not None:
        p = Path(int(g["m"]))
    elif g["c"] is not None:
        p = Cycle(int(g["c"]))
    else:
        p = PathUnion(int(g["n"]), int(g["pm"]))
    return normalize(p)


def pattern_graph(p: Pattern) -> Graph:
    """The pattern realised as a concrete graph."""
    match p:
        case Matching(t):
            return graph_from_edges(2 * t, [(2 * i, 2 * i + 1) for i in range(t)])
        case Path(m):
            return path_graph(m)
        case Cycle(n):
            return cycle_graph(n)
        case PathUnion(n, m):
            return disjoint_union(*[path_graph(m)] * n)
    raise TypeError(f"not a pattern: {p!r}")


def path_parameters(p: Pattern):
    """``(n, m)`` when ``p`` is a union of ``n`` paths ``P_m``, else ``None``."""
    match p:
        case Path(m):
            return 1, m
        case PathUnion(n, m):
            return n, m
    return None


# ---------------------------------------------------------------- matchings

def matching_number(adj: Sequence[int], alive: int) -> int:
    adj = tuple(a & alive for a in adj)
    return _nu(adj, alive)


@lru_cache(maxsize=200_000)
def _nu(adj, alive):
    # drop isolated vertices; a vertex of degree one is always matched to its neighbour
    best_v = -1
    best_d = 99
    for v in bits(alive):
        d = (adj[v] & alive).bit_count()
        if d == 0:
            alive &= ~(1 << v)
        elif d < best_d:
            best_v, best_d = v, d
    if best_v < 0:
        return 0
    nb = adj[best_v] & alive
    rest = alive & ~(1 << best_v)
    if best_d == 1:
        return 1 + _nu(adj, rest & ~nb)
    bound = alive.bit_count() // 2
    best = _nu(adj, rest)
    if best == bound:
        return best
    for u in bits(nb):
        best = max(best, 1 + _nu(adj, rest & ~(1 << u)))
        if best == bound:
            break
    return best


def max_matching_size(g: Graph) -> int:
    return matching_number(g.adj, g.vertex_mask)


# --------------------------------------------------------------------- paths

def _has_path(adj, alive, m):
    if m <= 0:
        return True
    if alive.bit_count() < m:
        return False
    if m == 1:
        return alive != 0
    if m == 2:
        return any(adj[v] & alive for v in bits(alive))
    for comp in component_masks(adj, alive):
        if comp.bit_count() < m:
            continue
        # starting only from vertices of minimum degree would be incomplete; try all
        for s in bits(comp):
            if _extend_path(adj, comp, s, 1 << s, 1, m):
                return True
    return False


def _extend_path(adj, alive, end, used, length, m):
    if length == m:
        return True
    free = alive & ~used
    if reach(adj, end, free | 1 << end).bit_count() - 1 < m - length:
        return False
    for u in bits(adj[end] & free):
        if _extend_path(adj, alive, u, used | 1 << u, length + 1, m):
            return True
    return False


def contains_path(g: Graph, m: int) -> bool:
    return _has_path(g.adj, g.vertex_mask, m)


# -------------------------------------------------------------------- cycles

def _cycle_search(adj, alive, length, exact):
    core = two_core(adj, alive)
    if core.bit_count() < length:
        return False
    for comp in component_masks(adj, core):
        if comp.bit_count() < length:
            continue
        for s in bits(comp):
            allowed = comp & ~((1 << s + 1) - 1)  # s is the smallest cycle vertex
            if (1 + allowed.bit_count()) < length:
                break
            if _extend_cycle(adj, allowed, s, s, 1 << s, 1, length, exact):
                return True
    return False


def _extend_cycle(adj, allowed, s, end, used, k, length, exact):
    if k >= length and k >= 3 and adj[end] >> s & 1:
        return True
    if exact and k == length:
        return False
    free = allowed & ~used
    need = length - k
    if need > 0 and reach(adj, end, free | 1 << end).bit_count() - 1 < need:
        return False
    for u in bits(adj[end] & free):
        if _extend_cycle(adj, allowed, s, u, used | 1 << u, k + 1, length, exact):
            return True
    return False


def contains_cycle_exact(g: Graph, n: int) -> bool:
    return _cycle_search(g.adj, g.vertex_mask, n, True)


def contains_cycle_at_least(g: Graph, length: int) -> bool:
    return _cycle_search(g.adj, g.vertex_mask, max(length, 3), False)


# --------------------------------------------------------------- path unions

def _path_sets_through(adj, alive, v, m):
    """Vertex masks of every ``m``-vertex path in ``alive`` that passes through ``v``."""
    found = set()
    seen = set()
    stack = [(1 << v, v, v)]
    while stack:
        used, a, b = stack.pop()
        if used.bit_count() == m:
            found.add(used)
            continue
        key = (used, min(a, b), max(a, b))
        if key in seen:
            continue
        seen.add(key)
        free = alive & ~used
        for u in bits(adj[a] & free):
            stack.append((used | 1 << u, u, b))
        for u in bits(adj[b] & free):
            stack.append((used | 1 << u, a, u))
    return sorted(found)


def _has_path_union(adj, alive, n, m):
    if n == 0:
        return True
    if m == 1:
        return alive.bit_count() >= n
    comps = [c for c in component_masks(adj, alive) if c.bit_count() >= m]
    if sum(c.bit_count() // m for c in comps) < n:
        return False
    if n == 1:
        return any(_has_path(adj, c, m) for c in comps)
    alive = 0
    for c in comps:
        alive |= c
    v = (alive & -alive).bit_length() - 1
    for s in _path_sets_through(adj, alive, v, m):
        if _has_path_union(adj, alive & ~s, n - 1, m):
            return True
    return _has_path_union(adj, alive & ~(1 << v), n, m)


def contains_path_union(g: Graph, n: int, m: int) -> bool:
    return _has_path_union(g.adj, g.vertex_mask, n, m)


# ------------------------------------------------------------------ dispatch

def contains_in(adj: Sequence[int], alive: int, p: Pattern) -> bool:
    """``contains`` on the subgraph of ``adj`` induced by the vertex mask ``alive``."""
    match p:
        case Matching(t):
            if alive.bit_count() < 2 * t:
                return False
            return matching_number(adj, alive) >= t
        case Path(m):
            return _has_path(adj, alive, m)
        case Cycle(n):
            return _cycle_search(adj, alive, n, True)
        case PathUnion(n, m):
            return _has_path_union(adj, alive, n, m)
    raise TypeError(f"not a pattern: {p!r}")


def contains(g: Graph, p: Pattern) -> bool:
    return contains_in(g.adj, g.vertex_mask, p)
