"""Exact size Ramsey values by witness plus exhaustive refutation.

``size_ramsey_exact`` walks edge counts upward.  At each size every graph
from the isomorph-free enumerator receives a verified ``(tK2, H)``-colouring,
which certifies that no graph of that size arrows.  The first size at which
some graph arrows is the answer, provided every smaller size was exhausted.

Colourings are tried cheapest first: the red-star adversary colouring for
connected hosts against ``nP_m``, then the colouring read off a failing
deletion in the 2K2 / 3K2 lemma, then the generic search.  All of them go
through :func:`verify_coloring` before they are recorded.

For disconnected searches against ``nP_m`` (``n >= 2``) only graphs whose
every component contains ``P_m`` are enumerated: a component without ``P_m`` can be
coloured entirely blue without creating red edges or a blue ``P_m``, so a
smallest arrowing graph never has one.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .arrowing import VALID, ArrowVerdict, Coloring, adversarial_coloring_connected, adversary_pivot, arrows, \
    arrows_2k2_lemma, arrows_3k2_lemma, arrows_generic, verify_coloring
from .constructions import Fig1A, Fig1B, build_family
from .enumeration import DEFAULT_EDGE_LIMIT, EnumConstraints, enumerate_graphs
from .errors import BudgetExceeded, PreconditionError
from .graph import Graph, girth, is_connected
from .graph6 import decode_graph6, encode_graph6
from .patterns import Path, Pattern, PathUnion, normalize, parse_pattern, path_parameters
from .report import verdict_from_dict, verdict_to_dict

EXACT, INTERVAL, EXHAUSTED = "exact", "interval", "budget-exhausted"


@dataclass
class SizeRecord:
    edges: int
    scanned: int
    all_admit_coloring: bool
    complete: bool
    certificates: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"edges": self.edges, "scanned": self.scanned, "all_admit_coloring": self.all_admit_coloring,
                "complete": self.complete, "certificates": self.certificates}

    @classmethod
    def from_dict(cls, d):
        return cls(d["edges"], d["scanned"], d["all_admit_coloring"], d["complete"], d["certificates"])


@dataclass
class SearchReport:
    query: dict
    budget: int
    per_size: list[SizeRecord] = field(default_factory=list)
    witness: dict | None = None
    conclusion: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    config: dict = field(default_factory=dict)
    tool_version: str = __version__
    wall_time_ms: int = 0

    def to_dict(self) -> dict:
        return {"query": self.query, "budget": self.budget,
                "per_size": [r.to_dict() for r in self.per_size],
                "witness": self.witness, "conclusion": self.conclusion, "notes": self.notes,
                "config": self.config, "tool_version": self.tool_version,
                "wall_time_ms": self.wall_time_ms}

    @classmethod
    def from_dict(cls, d):
        return cls(d["query"], d["budget"], [SizeRecord.from_dict(r) for r in d["per_size"]],
                   d.get("witness"), d["conclusion"], d.get("notes", []), d.get("config", {}),
                   d.get("tool_version", __version__), d.get("wall_time_ms", 0))

    @property
    def exact_value(self) -> int | None:
        return self.conclusion.get("value") if self.conclusion.get("kind") == EXACT else None


# --------------------------------------------------------------- certificates

def certify(g: Graph, t: int, h: Pattern) -> tuple[dict | None, ArrowVerdict | None]:
    """Return ``(certificate, None)`` for a non-arrowing graph or ``(None, verdict)`` if it arrows."""
    h = normalize(h)
    params = path_parameters(h)
    if t == 2 and params and g.edge_count and is_connected(g) and g.edge_count <= params[0] * params[1]:
        c = adversarial_coloring_connected(g, *params)
        if verify_coloring(g, t, h, c) == VALID:
            u = adversary_pivot(g)
            return {"graph6": encode_graph6(g), "method": "adversary", "pivot": u,
                    "degree": g.degree(u), "red": [list(e) for e in c.red]}, None
    if t == 2:
        v = arrows_2k2_lemma(g, h)
    elif t == 3 and girth(g) >= 6:
        v = arrows_3k2_lemma(g, h)
    else:
        v = arrows_generic(g, t, h)
    if v.arrows:
        return None, v
    if verify_coloring(g, t, h, v.certificate) != VALID:
        raise AssertionError(f"{v.method} produced an invalid colouring for {encode_graph6(g)}")
    cert = {"graph6": encode_graph6(g), "method": v.method, "red": [list(e) for e in v.certificate.red]}
    if v.trace is not None:
        cert["trace"] = {"kind": v.trace.kind, "vertices": list(v.trace.vertices)}
    return cert, None


def _certify_many(args):
    graphs, t, h = args
    return [certify(g, t, h) for g in graphs]


def _certify_all(graphs, t, h, workers):
    if workers > 1 and len(graphs) > 64:
        chunk = -(-len(graphs) // (4 * workers))
        pieces = [graphs[i:i + chunk] for i in range(0, len(graphs), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            out = []
            for part in pool.map(_certify_many, [(p, t, h) for p in pieces]):
                out.extend(part)
            return out
    return [certify(g, t, h) for g in graphs]


def recheck_certificate(cert: dict, t: int, h: Pattern) -> bool:
    g = decode_graph6(cert["graph6"])
    return verify_coloring(g, t, normalize(h), Coloring(g, tuple(tuple(e) for e in cert["red"]))) == VALID


# ------------------------------------------------------------------ witnesses

def known_constructions(t: int, h: Pattern, connected: bool) -> list[tuple[str, Graph]]:
    """Candidate arrowing graphs with a known shape, tried before the enumeration at each size."""
    h = normalize(h)
    params = path_parameters(h)
    out = []
    if t == 2 and params:
        n, m = params
        if m >= 2:
            out.append((f"fig1a:{n},{m}", build_family(Fig1A(n, m))))
        if not connected and m >= 2:
            out.append((f"fig1b:{n},{m}", build_family(Fig1B(n, m))))
    return out


def _witness_entry(g: Graph, verdict: ArrowVerdict, origin: str) -> dict:
    return {"graph6": encode_graph6(g), "origin": origin, "edges": g.edge_count,
            "verdict": verdict_to_dict(verdict)}


def _verified_upper(t, h, connected):
    best = None
    for name, g in known_constructions(t, h, connected):
        v = arrows(g, t, h)
        if v.arrows and (best is None or g.edge_count < best[0].edge_count):
            best = (g, v, name)
    return best


# --------------------------------------------------------------------- search

def component_reduction(h: Pattern, connected: bool) -> Pattern | None:
    if connected:
        return None
    h = normalize(h)
    if not isinstance(h, PathUnion):
        return None
    return Path(h.m)


def _scan(t, h, connected, budget, *, enum_limit, workers, store_certificates, report,
          use_constructions=True):
    reduce_to = component_reduction(h, connected)
    if reduce_to is not None:
        report.notes.append(
            f"components without {reduce_to} are skipped: colouring such a component blue adds no red "
            f"edge and no blue {reduce_to}")
    candidates = known_constructions(t, h, connected) if use_constructions else []
    for s in range(1, budget + 1):
        for name, g in candidates:
            if g.edge_count == s:
                v = arrows(g, t, h)
                if v.arrows:
                    report.witness = _witness_entry(g, v, name)
                    return s
        c = EnumConstraints(s, connected=connected, component_contains=reduce_to)
        try:
            graphs = list(enumerate_graphs(c, limit=enum_limit))
        except BudgetExceeded as exc:
            report.notes.append(f"stopped at size {s}: {exc}")
            report.conclusion = {"kind": EXHAUSTED}
            return None
        results = _certify_all(graphs, t, h, workers)
        certs = []
        witness = None
        for g, (cert, verdict) in zip(graphs, results):
            if cert is None:
                witness = (g, verdict)
                break
            certs.append(cert)
        if witness is not None:
            report.per_size.append(SizeRecord(s, len(certs) + 1, False, False,
                                              certs if store_certificates else []))
            report.witness = _witness_entry(witness[0], witness[1], "enumeration")
            return s
        report.per_size.append(SizeRecord(s, len(graphs), True, True, certs if store_certificates else []))
    return None


def size_ramsey_exact(t: int, h: Pattern, connected: bool = False, budget: int = DEFAULT_EDGE_LIMIT, *,
                      enum_limit: int | None = None, workers: int = 1,
                      store_certificates: bool = True) -> SearchReport:
    """Smallest size of a (connected) graph arrowing ``(tK2, h)``, searched up to ``budget`` edges.

    ``enum_limit`` raises the enumeration cap (default 9, at most 11).  When
    no arrowing graph turns up within the budget the conclusion is an
    interval whose lower end is certified by the exhausted sizes and whose
    upper end (if any) is a verified known construction.
    """
    start = time.perf_counter()
    h = normalize(h)
    report = SearchReport(
        query={"kind": "size_ramsey", "t": t, "pattern": str(h), "connected": connected},
        budget=budget,
        config={"enum_limit": DEFAULT_EDGE_LIMIT if enum_limit is None else enum_limit,
                "store_certificates": store_certificates})
    report.notes.append("size 0: the empty graph admits the empty colouring")
    found = _scan(t, h, connected, budget, enum_limit=report.config["enum_limit"], workers=workers, store_certificates=store_certificates, report=report)
    exhausted = [r.edges for r in report.per_size if r.complete]
    lower = 1 + max(exhausted, default=0)
    if found is None:
        upper = _verified_upper(t, h, connected)
        if upper is not None:
            report.witness = _witness_entry(upper[0], upper[1], upper[2])
            found = upper[0].edge_count
    if found is not None and all(s in exhausted for s in range(1, found)):
        report.conclusion = {"kind": EXACT, "value": found}
    else:
        kind = report.conclusion.get("kind", INTERVAL)
        report.conclusion = {"kind": kind, "lower": lower, "upper": found}
    report.wall_time_ms = int((time.perf_counter() - start) * 1000)
    return report


def conjecture_probe(n: int, m: int, budget: int = DEFAULT_EDGE_LIMIT, *, enum_limit: int | None = None,
                     workers: int = 1, store_certificates: bool = True) -> SearchReport:
    """Verified interval for the ordinary number of ``(2K2, nP_m)`` with ``n >= 5``.

    The upper end comes from ``C_{nm+1}`` and ``(n+1)P_m``; the lower end
    from exhausting sizes up to ``budget``.  The report states an interval
    only, even when its ends meet.
    """
    if n < 5:
        raise PreconditionError("the probe targets n >= 5; smaller n have exact values")
    start = time.perf_counter()
    h = PathUnion(n, m)
    report = SearchReport(
        query={"kind": "conjecture_probe", "t": 2, "pattern": str(h), "connected": False,
               "predicted": min(n * m + 1, (n + 1) * (m - 1))},
        budget=budget,
        config={"enum_limit": DEFAULT_EDGE_LIMIT if enum_limit is None else enum_limit,
                "store_certificates": store_certificates})
    upper = None
    for name, g in known_constructions(2, h, False):
        v = arrows_2k2_lemma(g, h)
        report.notes.append(f"{name}: {g.edge_count} edges, arrows={v.arrows}")
        if v.arrows and (upper is None or g.edge_count < upper[0].edge_count):
            upper = (g, v, name)
    limit = DEFAULT_EDGE_LIMIT if enum_limit is None else enum_limit
    found = _scan(2, h, False, min(budget, upper[0].edge_count - 1) if upper else budget,
                  enum_limit=limit, workers=workers, store_certificates=store_certificates,
                  report=report, use_constructions=False)
    exhausted = [r.edges for r in report.per_size if r.complete]
    lower = 1 + max(exhausted, default=0)
    if found is not None:
        upper_value = found
    else:
        upper_value = upper[0].edge_count if upper else None
        if upper is not None:
            report.witness = _witness_entry(upper[0], upper[1], upper[2])
    kind = report.conclusion.get("kind", INTERVAL)
    report.conclusion = {"kind": kind, "lower": lower, "upper": upper_value}
    report.wall_time_ms = int((time.perf_counter() - start) * 1000)
    return report


# --------------------------------------------------------------- re-checking

def reverify_report(report: SearchReport | dict) -> list[str]:
    """Re-run every stored certificate and the witness verdict; return a list of problems."""
    if isinstance(report, dict):
        report = SearchReport.from_dict(report)
    problems = []
    t = report.query["t"]
    h = parse_pattern(report.query["pattern"])
    for rec in report.per_size:
        for cert in rec.certificates:
            if not recheck_certificate(cert, t, h):
                problems.append(f"size {rec.edges}: certificate for {cert['graph6']} does not verify")
    if report.witness is not None:
        stored = report.witness["verdict"]
        g = decode_graph6(report.witness["graph6"])
        method = stored["method"]
        if method == "lemma2K2":
            fresh = arrows_2k2_lemma(g, h)
        elif method == "lemma3K2":
            fresh = arrows_3k2_lemma(g, h)
        else:
            fresh = arrows_generic(g, t, h)
        if verdict_to_dict(fresh) != stored:
            problems.append("witness verdict differs on recomputation")
        if not verdict_from_dict(stored).arrows:
            problems.append("witness does not arrow")
    if report.conclusion.get("kind") == EXACT:
        k = report.conclusion["value"]
        done = {r.edges for r in report.per_size if r.complete and r.all_admit_coloring}
        missing = [s for s in range(1, k) if s not in done]
        if missing:
            problems.append(f"exact {k} claimed but sizes {missing} were not exhausted")
        if report.witness is None or report.witness["edges"] != k:
            problems.append(f"exact {k} claimed without a witness of that size")
        for rec in report.per_size:
            if rec.complete and report.config.get("store_certificates", True) \
                    and len(rec.certificates) != rec.scanned:
                problems.append(f"size {rec.edges}: {len(rec.certificates)} certificates for "
                                f"{rec.scanned} graphs")
    return problems

