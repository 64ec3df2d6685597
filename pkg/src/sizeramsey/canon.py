"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine the ordered partition to an
equitable one, individualise each vertex of the first non-singleton cell,
recurse.  Each leaf gives a relabelled adjacency; the largest one is the
canonical form.  Automorphisms discovered when two leaves agree are used to
skip children that lie in the same orbit of the pointwise stabiliser of the
current prefix, which keeps highly symmetric graphs (matchings, stars)
polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, mask_of, relabel
from .graph6 import encode_graph6


@dataclass(frozen=True, order=True)
class CanonicalCode:
    edge_count: int
    order: int
    data: bytes

    def __str__(self):
        return self.data.decode("ascii")


@dataclass(frozen=True)
class Labelling:
    """``perm[v]`` is the canonical label of vertex ``v``."""
    perm: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    graph: Graph

    @property
    def code(self) -> CanonicalCode:
        return CanonicalCode(self.graph.edge_count, self.graph.order,
                             encode_graph6(self.graph).encode("ascii"))


def _refine(adj, cells):
    """Coarsest equitable refinement; subcells ordered by neighbour count."""
    cells = list(cells)
    i = 0
    while i < len(cells):
        if len(cells) == len(adj):
            break
        wmask = mask_of(cells[i])
        new = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups = {}
            for v in cell:
                groups.setdefault((adj[v] & wmask).bit_count(), []).append(v)
            if len(groups) == 1:
                new.append(cell)
            else:
                split = True
                new.extend(groups[k] for k in sorted(groups))
        if split:
            cells = new
            i = 0
        else:
            i += 1
    return cells


def _orbit_of(v, generators, stabilised):
    """Orbit of ``v`` under generators that fix every vertex of ``stabilised``."""
    gens = [g for g in generators if all(g[p] == p for p in stabilised)]
    orbit = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def canonical_labelling(g: Graph) -> Labelling:
    n = g.order
    adj = g.adj
    if n == 0:
        return Labelling((), (), g)

    state = {"first": None, "best": None}
    generators: list[tuple[int, ...]] = []

    def leaf(cells):
        lab = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(lab):
            pos[v] = i
        code = tuple(mask_of(pos[u] for u in bits(adj[v])) for v in lab)
        if state["first"] is None:
            state["first"] = state["best"] = (code, lab)
            return
        for ref_code, ref_lab in (state["first"], state["best"]):
            if code == ref_code:
                gamma = [0] * n
                for a, b in zip(lab, ref_lab):
                    gamma[a] = b
                gamma = tuple(gamma)
                if gamma not in generators and any(gamma[i] != i for i in range(n)):
                    generators.append(gamma)
                return
        if code > state["best"][0]:
            state["best"] = (code, lab)

    def search(cells, prefix):
        cells = _refine(adj, cells)
        if len(cells) == n:
            leaf(cells)
            return
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = sorted(cells[t])
        tried: list[int] = []
        for v in target:
            if tried and any(v in _orbit_of(u, generators, prefix) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cells[t] if u != v]
            search(cells[:t] + [[v], rest] + cells[t + 1:], prefix + [v])

    degree_cells = {}
    for v in range(n):
        degree_cells.setdefault(adj[v].bit_count(), []).append(v)
    search([degree_cells[d] for d in sorted(degree_cells)], [])

    code, lab = state["best"]
    perm = [0] * n
    for i, v in enumerate(lab):
        perm[v] = i
    return Labelling(tuple(perm), tuple(generators), relabel(g, perm))


def canonical_form(g: Graph) -> CanonicalCode:
    return canonical_labelling(g).code


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.order == h.order and g.edge_count == h.edge_count and \
        canonical_form(g) == canonical_form(h)


def pair_orbit_representatives(n: int, pairs, generators):
    """Keep one pair per orbit of the group generated by ``generators``.

    A vertex index ``>= n`` stands for a fresh vertex and is fixed by every
    generator.
    """
    reps = []
    seen = set()
    for p in pairs:
        key = tuple(sorted(p))
        if key in seen:
            continue
        reps.append(key)
        frontier = [key]
        seen.add(key)
        while frontier:
            a, b = frontier.pop()
            for gam in generators:
                img = tuple(sorted((gam[a] if a < n else a, gam[b] if b < n else b)))
                if img not in seen:
                    seen.add(img)
                    frontier.append(img)
    return reps
