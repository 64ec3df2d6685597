"""Deciding ``F -> (tK2, H)`` and checking ``(tK2, H)``-colourings.

Three deciders are provided:

* :func:`arrows_generic` searches red edge sets directly and works for any
  ``t`` and any pattern.
* :func:`arrows_2k2_lemma` uses the vertex/triangle deletion characterisation
  for ``t = 2``.
* :func:`arrows_3k2_lemma` uses the vertex-pair deletion characterisation for
  ``t = 3`` on hosts without cycles of length at most five.

Every negative verdict carries a colouring that :func:`verify_coloring`
accepts.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import BudgetExceeded, PreconditionError
from .graph import Graph, bits, disjoint_union, girth, is_connected, on_cycle_vertices, triangles
from .patterns import Pattern, contains_in, matching_number, normalize

GENERIC = "generic"
LEMMA_2K2 = "lemma2K2"
LEMMA_3K2 = "lemma3K2"
COMPOSED = "composed"

VALID = "valid"
RED_VIOLATION = "red_violation"
BLUE_VIOLATION = "blue_violation"

DEFAULT_EDGE_BUDGET = 28


@dataclass(frozen=True)
class Coloring:
    """A red edge set of ``host``; every other edge is blue."""
    host: Graph
    red: tuple[tuple[int, int], ...]

    def __post_init__(self):
        red = tuple(sorted(tuple(sorted(e)) for e in self.red))
        object.__setattr__(self, "red", red)

    def blue(self) -> list[tuple[int, int]]:
        red = set(self.red)
        return [e for e in self.host.edges() if e not in red]

    def red_masks(self) -> list[int]:
        adj = [0] * self.host.order
        for u, v in self.red:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def blue_masks(self) -> list[int]:
        red = self.red_masks()
        return [a & ~r for a, r in zip(self.host.adj, red)]


@dataclass(frozen=True)
class DeletionTrace:
    """The deleted object whose removal leaves no copy of the pattern.

    ``kind`` is ``"vertex"``, ``"triangle"`` or ``"pair"``.
    """
    kind: str
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class ArrowVerdict:
    arrows: bool
    method: str
    host: Graph
    t: int
    pattern: Pattern
    certificate: Coloring | None = None
    trace: DeletionTrace | None = None
    parts: tuple = field(default=(), repr=False)


def verify_coloring(f: Graph, t: int, h: Pattern, c: Coloring) -> str:
    """Classify a colouring of ``f`` as ``valid``, ``red_violation`` or ``blue_violation``."""
    if c.host != f:
        raise ValueError("colouring belongs to a different host graph")
    for u, v in c.red:
        if not (0 <= u < f.order and 0 <= v < f.order) or not f.has_edge(u, v):
            raise ValueError(f"red edge {(u, v)} is not an edge of the host")
    full = f.vertex_mask
    if matching_number(c.red_masks(), full) >= t:
        return RED_VIOLATION
    if contains_in(c.blue_masks(), full, normalize(h)):
        return BLUE_VIOLATION
    return VALID


def _star_coloring(f: Graph, centres: Sequence[int]) -> Coloring:
    red = [(u, v) for u, v in f.edges() if u in centres or v in centres]
    return Coloring(f, tuple(red))


# ------------------------------------------------------------------- generic

def _branch_order(f: Graph) -> list[tuple[int, int]]:
    deg = f.degrees()
    return sorted(f.edges(), key=lambda e: (-(deg[e[0]] + deg[e[1]]), e))


def find_coloring(f: Graph, t: int, h: Pattern) -> Coloring | None:
    """Search for a ``(tK2, h)``-colouring of ``f``; ``None`` means ``f`` arrows.

    Branching puts each edge red before blue.  Any colouring can be enlarged
    to one whose red set is inclusion-maximal with matching number below
    ``t`` (recolouring blue edges red never creates a blue copy of ``h``), and
    red-first depth-first search reaches such colourings first.  A branch is
    cut as soon as the red matching number reaches ``t`` or the edges already
    committed to blue contain ``h``.
    """
    h = normalize(h)
    full = f.vertex_mask
    if not contains_in(f.adj, full, h):
        return Coloring(f, ())
    if matching_number(f.adj, full) < t:
        return Coloring(f, tuple(f.edges()))
    edges = _branch_order(f)
    n = f.order
    red = [0] * n
    blue = [0] * n
    chosen: list[tuple[int, int]] = []

    def rec(i):
        if i == len(edges):
            return True
        u, v = edges[i]
        red[u] |= 1 << v
        red[v] |= 1 << u
        if matching_number(red, full) < t:
            chosen.append((u, v))
            if rec(i + 1):
                return True
            chosen.pop()
        red[u] &= ~(1 << v)
        red[v] &= ~(1 << u)
        blue[u] |= 1 << v
        blue[v] |= 1 << u
        if not contains_in(blue, full, h) and rec(i + 1):
            return True
        blue[u] &= ~(1 << v)
        blue[v] &= ~(1 << u)
        return False

    if rec(0):
        return Coloring(f, tuple(chosen))
    return None


def arrows_generic(f: Graph, t: int, h: Pattern, max_edges: int = DEFAULT_EDGE_BUDGET) -> ArrowVerdict:
    if f.edge_count > max_edges:
        raise BudgetExceeded(
            f"generic search refused: {f.edge_count} edges exceeds budget {max_edges}",
            limit=max_edges, requested=f.edge_count)
    h = normalize(h)
    c = find_coloring(f, t, h)
    return ArrowVerdict(c is None, GENERIC, f, t, h, certificate=c)


# ------------------------------------------------------------------- lemmas

def arrows_2k2_lemma(f: Graph, h: Pattern) -> ArrowVerdict:
    """``f -> (2K2, h)`` iff ``h`` survives deleting any vertex and any triangle's edges.

    A red graph without ``2K2`` is a star or a triangle, so the two deletion
    families cover every candidate colouring.  Triangles are checked first.
    """
    h = normalize(h)
    full = f.vertex_mask
    for tri in triangles(f):
        a, b, c = tri
        adj = list(f.adj)
        for x, y in ((a, b), (a, c), (b, c)):
            adj[x] &= ~(1 << y)
            adj[y] &= ~(1 << x)
        if not contains_in(adj, full, h):
            cert = Coloring(f, ((a, b), (a, c), (b, c)))
            return ArrowVerdict(False, LEMMA_2K2, f, 2, h, cert, DeletionTrace("triangle", tri))
    for v in range(f.order):
        if not contains_in(f.adj, full & ~(1 << v), h):
            return ArrowVerdict(False, LEMMA_2K2, f, 2, h, _star_coloring(f, (v,)),
                                DeletionTrace("vertex", (v,)))
    return ArrowVerdict(True, LEMMA_2K2, f, 2, h)


def arrows_3k2_lemma(f: Graph, h: Pattern) -> ArrowVerdict:
    """``f -> (3K2, h)`` iff ``h`` survives deleting any two vertices.

    Only valid when ``f`` has no cycle of length five or less; a red graph
    with matching number two is then a union of two stars.
    """
    g = girth(f)
    if g <= 5:
        raise PreconditionError(
            f"host girth is {g}; the pair-deletion test needs girth >= 6, use arrows_generic")
    h = normalize(h)
    full = f.vertex_mask
    if f.order < 2:
        if not contains_in(f.adj, 0, h):
            return ArrowVerdict(False, LEMMA_3K2, f, 3, h, _star_coloring(f, tuple(range(f.order))),
                                DeletionTrace("pair", tuple(range(f.order))))
        return ArrowVerdict(True, LEMMA_3K2, f, 3, h)
    for u, v in itertools.combinations(range(f.order), 2):
        if not contains_in(f.adj, full & ~(1 << u | 1 << v), h):
            return ArrowVerdict(False, LEMMA_3K2, f, 3, h, _star_coloring(f, (u, v)),
                                DeletionTrace("pair", (u, v)))
    return ArrowVerdict(True, LEMMA_3K2, f, 3, h)


def arrows(f: Graph, t: int, h: Pattern, method: str = "auto",
           max_edges: int = DEFAULT_EDGE_BUDGET) -> ArrowVerdict:
    """Dispatch: ``t = 2`` to the 2K2 lemma, ``t = 3`` with girth >= 6 to the 3K2 lemma, else generic."""
    if method == "generic":
        return arrows_generic(f, t, h, max_edges)
    if method == "lemma":
        if t == 2:
            return arrows_2k2_lemma(f, h)
        if t == 3:
            return arrows_3k2_lemma(f, h)
        raise PreconditionError(f"no deletion lemma for t = {t}")
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if t == 2:
        return arrows_2k2_lemma(f, h)
    if t == 3 and girth(f) >= 6:
        return arrows_3k2_lemma(f, h)
    return arrows_generic(f, t, h, max_edges)


# --------------------------------------------------------- explicit colourings

def adversary_pivot(f: Graph) -> int:
    """The vertex whose star is coloured red: lowest vertex next to a leaf for a
    tree, otherwise the lowest vertex lying on a cycle."""
    if f.edge_count == 0:
        return 0
    if f.edge_count == f.order - 1:
        leaves = [v for v in range(f.order) if f.degree(v) == 1]
        return min(w for v in leaves for w in bits(f.adj[v]))
    return on_cycle_vertices(f)[0]


def adversarial_coloring_connected(f: Graph, n: int, m: int) -> Coloring:
    """Red star at :func:`adversary_pivot`; the blue rest has too few vertices for ``nP_m``."""
    if not is_connected(f):
        raise PreconditionError("adversarial colouring needs a connected host")
    if f.edge_count > n * m:
        raise PreconditionError(f"host has {f.edge_count} > nm = {n * m} edges")
    return _star_coloring(f, (adversary_pivot(f),))


# --------------------------------------------------------------- composition

def compose_union_arrowing(parts: Sequence[tuple[Graph, int, ArrowVerdict]]) -> ArrowVerdict:
    """Disjoint union rule: ``F_i -> (t_i K2, H)`` for all ``i`` gives ``sum F_i -> (sum t_i K2, H)``."""
    if not parts:
        raise ValueError("nothing to compose")
    pattern = None
    for g, t, verdict in parts:
        if not isinstance(verdict, ArrowVerdict):
            raise TypeError("part verdicts must be ArrowVerdict instances")
        if not verdict.arrows:
            raise PreconditionError("a part does not arrow; the union rule does not apply")
        if verdict.host != g or verdict.t != t:
            raise PreconditionError("part verdict does not match its graph and t")
        if pattern is None:
            pattern = verdict.pattern
        elif verdict.pattern != pattern:
            raise PreconditionError("parts were verified against different patterns")
    if len(parts) == 1:
        return parts[0][2]
    union = disjoint_union(*(g for g, _, _ in parts))
    total = sum(t for _, t, _ in parts)
    return ArrowVerdict(True, COMPOSED, union, total, pattern,
                        parts=tuple(v for _, _, v in parts))

