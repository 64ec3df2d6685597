"""Explicit arrowing graphs and a chorded-cycle witness search.

Family mini-language (used by the CLI)::

    cycle:7                         C_7
    pathunion:2,3                   2P_3
    fig1a:2,3                       C_{nm+1}
    fig1b:3,4                       (n+1)P_m
    chorded:15+{(0,6),(3,11)}       C_15 plus the listed chords
    compose43:t=5,m=9,base=@f.g6    base + ((t-3)/2) C_{m+1}
    bridged43:t=5,m=9,base=@f.g6    the same, joined into one component
    bridged:@a.g6,@b.g6             parts joined vertex 0 to vertex 0
"""
from __future__ import annotations

import itertools
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .arrowing import ArrowVerdict, arrows, arrows_2k2_lemma, arrows_3k2_lemma
from .errors import GraphError, PreconditionError
from .graph import Graph, add_edges, cycle_graph, disjoint_union, girth, is_connected, path_graph, \
    triangles
from .graph6 import parse_graph_arg
from .patterns import Path, Pattern, normalize


@dataclass(frozen=True)
class CycleFamily:
    k: int


@dataclass(frozen=True)
class PathUnionFamily:
    n: int
    m: int


@dataclass(frozen=True)
class Fig1A:
    """``C_{nm+1}``."""
    n: int
    m: int


@dataclass(frozen=True)
class Fig1B:
    """``(n+1) P_m``."""
    n: int
    m: int


@dataclass(frozen=True)
class ChordedCycle:
    k: int
    chords: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class Compose43:
    """``base + ((t-3)/2) C_{m+1}`` for a base arrowing ``(3K2, P_m)``."""
    t: int
    m: int
    base: Graph
    verify_base: bool = field(default=True, compare=False)


@dataclass(frozen=True)
class Bridged:
    """Disjoint union of connected parts plus ``len(parts) - 1`` bridges.

    ``bridges`` holds ``((i, u), (j, v))`` pairs: vertex ``u`` of part ``i``
    joined to vertex ``v`` of part ``j``.  By default part ``i`` vertex 0 is
    joined to part ``i+1`` vertex 0.
    """
    parts: tuple[Graph, ...]
    bridges: tuple | None = None


FamilySpec = CycleFamily | PathUnionFamily | Fig1A | Fig1B | ChordedCycle | Compose43 | Bridged


def _chorded(k: int, chords) -> Graph:
    base = cycle_graph(k)
    seen = set()
    for u, v in chords:
        a, b = sorted((u, v))
        if not (0 <= a < b < k):
            raise GraphError(f"chord {(u, v)} out of range for C_{k}")
        if base.has_edge(a, b):
            raise GraphError(f"chord {(u, v)} is already a cycle edge")
        if (a, b) in seen:
            raise GraphError(f"chord {(a, b)} repeated")
        seen.add((a, b))
    return add_edges(base, sorted(seen))


def compose43_parts(t: int, m: int, base: Graph) -> list[Graph]:
    if t < 3 or t % 2 == 0:
        raise PreconditionError(f"composition needs odd t >= 3, got {t}")
    return [base] + [cycle_graph(m + 1)] * ((t - 3) // 2)


def _bridge(parts: Sequence[Graph], bridges) -> Graph:
    for p in parts:
        if not is_connected(p):
            raise PreconditionError("bridged parts must each be connected")
    offsets = list(itertools.accumulate([0] + [p.order for p in parts]))
    if bridges is None:
        bridges = [((i, 0), (i + 1, 0)) for i in range(len(parts) - 1)]
    if len(bridges) != len(parts) - 1:
        raise PreconditionError(f"{len(parts)} parts need exactly {len(parts) - 1} bridges")
    union = disjoint_union(*parts)
    extra = [(offsets[i] + u, offsets[j] + v) for (i, u), (j, v) in bridges]
    g = add_edges(union, extra)
    if g.edge_count != union.edge_count + len(extra) or not is_connected(g):
        raise PreconditionError("bridges do not connect the parts")
    return g


def build_family(s: FamilySpec) -> Graph:
    """Build a family member; cycles are labelled ``0..k-1`` in order, parts concatenated."""
    match s:
        case CycleFamily(k):
            return cycle_graph(k)
        case PathUnionFamily(n, m):
            return disjoint_union(*[path_graph(m)] * n)
        case Fig1A(n, m):
            return cycle_graph(n * m + 1)
        case Fig1B(n, m):
            return disjoint_union(*[path_graph(m)] * (n + 1))
        case ChordedCycle(k, chords):
            return _chorded(k, chords)
        case Compose43(t, m, base, verify):
            parts = compose43_parts(t, m, base)
            if verify and not arrows(base, 3, Path(m)).arrows:
                raise PreconditionError(f"base graph does not arrow (3K2, P{m})")
            return disjoint_union(*parts)
        case Bridged(parts, bridges):
            return _bridge(parts, bridges)
    raise TypeError(f"unknown family {s!r}")


def bridged43(t: int, m: int, base: Graph, verify_base: bool = True) -> Bridged:
    if verify_base and not arrows(base, 3, Path(m)).arrows:
        raise PreconditionError(f"base graph does not arrow (3K2, P{m})")
    return Bridged(tuple(compose43_parts(t, m, base)))


def _load_graph(arg: str) -> Graph:
    graphs = parse_graph_arg(arg)
    if len(graphs) != 1:
        raise ValueError(f"{arg} must hold exactly one graph")
    return graphs[0]


def parse_family(text: str) -> FamilySpec:
    name, _, rest = text.strip().partition(":")
    name = name.lower()
    try:
        if name in ("cycle", "fig1a", "fig1b", "pathunion"):
            nums = [int(x) for x in rest.split(",")]
            return {"cycle": CycleFamily, "fig1a": Fig1A, "fig1b": Fig1B,
                    "pathunion": PathUnionFamily}[name](*nums)
        if name == "chorded":
            k, _, chords = rest.partition("+")
            pairs = [(int(a), int(b)) for a, b in re.findall(r"\((\d+)\s*,\s*(\d+)\)", chords)]
            return ChordedCycle(int(k), tuple(pairs))
        if name in ("compose43", "bridged43"):
            opts = dict(item.split("=", 1) for item in rest.split(","))
            t, m, base = int(opts["t"]), int(opts["m"]), _load_graph(opts["base"])
            if name == "compose43":
                return Compose43(t, m, base)
            return bridged43(t, m, base)
        if name == "bridged":
            return Bridged(tuple(_load_graph(a) for a in rest.split(",")))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad family spec {text!r}: {exc}") from exc
    raise ValueError(f"unknown family {name!r}")


# ------------------------------------------------------------ witness search

@dataclass(frozen=True)
class ArrowingChecker:
    """Property for witness search: optional structural gates, then a lemma decider.

    Returns the verdict when the graph passes, else ``None``.
    """
    t: int
    pattern: Pattern
    min_girth: int | None = None
    triangle_free: bool = False

    def __call__(self, g: Graph) -> ArrowVerdict | None:
        if self.min_girth is not None and girth(g) < self.min_girth:
            return None
        if self.triangle_free and triangles(g):
            return None
        if self.t == 2:
            v = arrows_2k2_lemma(g, self.pattern)
        elif self.t == 3:
            v = arrows_3k2_lemma(g, self.pattern)
        else:
            v = arrows(g, self.t, self.pattern)
        return v if v.arrows else None

    def describe(self) -> str:
        gates = []
        if self.min_girth is not None:
            gates.append(f"girth>={self.min_girth}")
        if self.triangle_free:
            gates.append("triangle-free")
        gates.append(f"arrows(M{self.t},{normalize(self.pattern)})")
        return " and ".join(gates)


def dihedral_canonical(k: int, chords) -> tuple[tuple[int, int], ...]:
    """Smallest image of a chord set under the rotations and reflections of C_k."""
    best = None
    for r in range(k):
        for sign in (1, -1):
            img = tuple(sorted(tuple(sorted(((sign * a + r) % k, (sign * b + r) % k)))
                               for a, b in chords))
            if best is None or img < best:
                best = img
    return best


def chord_placements(k: int, count: int):
    """Chord sets of C_k of the given size, one per dihedral orbit, in lexicographic order."""
    non_edges = [(a, b) for a in range(k) for b in range(a + 2, k) if not (a == 0 and b == k - 1)]
    for combo in itertools.combinations(non_edges, count):
        if dihedral_canonical(k, combo) == combo:
            yield combo


@dataclass
class WitnessResult:
    graph: Graph | None
    verdict: ArrowVerdict | None
    report: dict

    @property
    def found(self) -> bool:
        return self.graph is not None


def _scan_chunk(k: int, combos, checker):
    for i, combo in enumerate(combos):
        g = _chorded(k, combo)
        v = checker(g)
        if v is not None:
            return i, combo, g, v
    return None


def witness_search(size: int, chord_range: tuple[int, int], checker: Callable[[Graph], ArrowVerdict | None],
                   *, workers: int = 1) -> WitnessResult:
    """Scan ``C_k`` plus ``c`` chords with ``k + c = size`` for ``c`` in ``chord_range``.

    Chord counts are tried in increasing order and placements in
    lexicographic order of their dihedral-canonical form; the first graph the
    checker accepts is returned.  When none passes the report records the
    exhaustive scan.
    """
    lo, hi = chord_range
    if lo < 0 or hi > 4 or lo > hi:
        raise PreconditionError("chord counts must lie in 0..4")
    scanned = []
    description = checker.describe() if hasattr(checker, "describe") else repr(checker)
    for c in range(lo, hi + 1):
        k = size - c
        if k < 3:
            continue
        combos = list(chord_placements(k, c))
        hit = None
        if workers > 1 and len(combos) > 64:
            chunk = -(-len(combos) // workers)
            pieces = [combos[i:i + chunk] for i in range(0, len(combos), chunk)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_scan_chunk, [k] * len(pieces), pieces, [checker] * len(pieces)))
            for idx, res in enumerate(results):
                if res is not None:
                    hit = (idx * chunk + res[0],) + res[1:]
                    break
        else:
            hit = _scan_chunk(k, combos, checker)
        if hit is not None:
            index, combo, g, v = hit
            scanned.append({"k": k, "chords": c, "placements": len(combos), "checked": index + 1})
            return WitnessResult(g, v, {
                "size": size, "family": "chorded-cycle", "property": description,
                "outcome": "witness", "spec": {"k": k, "chords": [list(p) for p in combo]},
                "scanned": scanned})
        scanned.append({"k": k, "chords": c, "placements": len(combos), "checked": len(combos)})
    return WitnessResult(None, None, {
        "size": size, "family": "chorded-cycle", "property": description,
        "outcome": "exhaustive-negative", "scanned": scanned})


def chorded_from_report(report: dict) -> Graph:
    spec = report["spec"]
    return _chorded(spec["k"], [tuple(p) for p in spec["chords"]])

