"""JSON serialisation of colourings, verdicts and search reports."""
from __future__ import annotations

import json
from pathlib import Path

from . import __version__
from .arrowing import ArrowVerdict, Coloring, DeletionTrace, VALID, verify_coloring
from .graph6 import decode_graph6, encode_graph6
from .patterns import parse_pattern


def coloring_to_dict(c: Coloring, t: int, pattern) -> dict:
    """Certificate file layout: host graph6, ``t``, pattern, sorted red pairs."""
    return {"host": encode_graph6(c.host), "t": t, "pattern": str(pattern),
            "red": [list(e) for e in c.red]}


def coloring_from_dict(d: dict) -> tuple[Coloring, int, object]:
    host = decode_graph6(d["host"])
    return Coloring(host, tuple(tuple(e) for e in d["red"])), d["t"], parse_pattern(d["pattern"])


def check_certificate(d: dict) -> str:
    c, t, p = coloring_from_dict(d)
    return verify_coloring(c.host, t, p, c)


def verdict_to_dict(v: ArrowVerdict) -> dict:
    return {
        "arrows": v.arrows,
        "method": v.method,
        "host": encode_graph6(v.host),
        "t": v.t,
        "pattern": str(v.pattern),
        "certificate": None if v.certificate is None else [list(e) for e in v.certificate.red],
        "trace": None if v.trace is None else {"kind": v.trace.kind, "vertices": list(v.trace.vertices)},
        "parts": [verdict_to_dict(p) for p in v.parts],
    }


def verdict_from_dict(d: dict) -> ArrowVerdict:
    host = decode_graph6(d["host"])
    cert = None
    if d.get("certificate") is not None:
        cert = Coloring(host, tuple(tuple(e) for e in d["certificate"]))
    trace = None
    if d.get("trace") is not None:
        trace = DeletionTrace(d["trace"]["kind"], tuple(d["trace"]["vertices"]))
    parts = tuple(verdict_from_dict(p) for p in d.get("parts", []))
    return ArrowVerdict(d["arrows"], d["method"], host, d["t"], parse_pattern(d["pattern"]),
                        cert, trace, parts)


def verdict_certificate_ok(v: ArrowVerdict) -> bool:
    """Negative verdicts with a certificate must carry a valid colouring."""
    if v.arrows or v.certificate is None:
        return True
    return verify_coloring(v.host, v.t, v.pattern, v.certificate) == VALID


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def emit_report(report, path) -> Path:
    """Write a report (anything with ``to_dict`` or a plain dict) as stable JSON."""
    data = report.to_dict() if hasattr(report, "to_dict") else dict(report)
    data.setdefault("tool_version", __version__)
    path = Path(path)
    path.write_text(dumps(data))
    return path


def load_json(path) -> dict:
    return json.loads(Path(path).read_text())
