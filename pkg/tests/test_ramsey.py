import json

import pytest

from sizeramsey.canon import is_isomorphic
from sizeramsey.graph import cycle_graph
from sizeramsey.graph6 import decode_graph6
from sizeramsey.patterns import Path, PathUnion
from sizeramsey.ramsey import EXACT, INTERVAL, SearchReport, certify, component_reduction, conjecture_probe, \
    reverify_report, size_ramsey_exact
from sizeramsey.report import dumps, emit_report, load_json
from sizeramsey.errors import PreconditionError


@pytest.mark.parametrize("connected", [False, True])
def test_p3(connected):
    r = size_ramsey_exact(2, Path(3), connected, 5)
    assert r.conclusion == {"kind": EXACT, "value": 4}
    assert is_isomorphic(decode_graph6(r.witness["graph6"]), cycle_graph(4))
    assert reverify_report(r) == []


def test_two_p3_connected():
    r = size_ramsey_exact(2, PathUnion(2, 3), True, 8)
    assert r.exact_value == 7
    assert is_isomorphic(decode_graph6(r.witness["graph6"]), cycle_graph(7))


def test_two_p3():
    r = size_ramsey_exact(2, PathUnion(2, 3), False, 7)
    assert r.exact_value == 6
    assert any("skipped" in n for n in r.notes)
    assert reverify_report(r) == []


def test_interval_when_budget_short():
    r = size_ramsey_exact(2, Path(5), False, 3)
    assert r.conclusion == {"kind": INTERVAL, "lower": 4, "upper": 6}


def test_budget_meets_known_construction():
    # sizes 1..4 exhausted and C_6 verified: exact without scanning size 6
    r = size_ramsey_exact(2, Path(5), False, 5)
    assert r.exact_value == 6 and max(s.edges for s in r.per_size) == 5


def test_certify():
    cert, verdict = certify(cycle_graph(3), 2, Path(3))
    assert verdict is None and cert["method"] == "adversary"
    cert, verdict = certify(cycle_graph(4), 2, Path(3))
    assert cert is None and verdict.arrows


def test_component_reduction_scope():
    assert component_reduction(PathUnion(2, 3), False) == Path(3)
    assert component_reduction(PathUnion(2, 3), True) is None
    assert component_reduction(Path(3), False) is None


def test_report_roundtrip(tmp_path):
    r = size_ramsey_exact(2, PathUnion(2, 3), True, 7)
    path = emit_report(r, tmp_path / "r.json")
    data = load_json(path)
    assert SearchReport.from_dict(data).to_dict() == r.to_dict()
    assert reverify_report(data) == []
    assert list(data) == sorted(data)


def test_reverify_detects_tampering():
    r = size_ramsey_exact(2, Path(4), False, 5)
    data = json.loads(dumps(r.to_dict()))
    cert = data["per_size"][-1]["certificates"][0]
    cert["red"] = []
    assert reverify_report(data)
    data = json.loads(dumps(r.to_dict()))
    data["per_size"] = data["per_size"][:-1]
    assert any("not exhausted" in p for p in reverify_report(data))


def test_determinism():
    a = size_ramsey_exact(3, Path(3), False, 6).to_dict()
    b = size_ramsey_exact(3, Path(3), False, 6).to_dict()
    a.pop("wall_time_ms")
    b.pop("wall_time_ms")
    assert a == b


def test_conjecture_probe():
    r = conjecture_probe(5, 3, 6)
    assert r.conclusion == {"kind": INTERVAL, "lower": 7, "upper": 12}
    assert r.query["predicted"] == 12
    with pytest.raises(PreconditionError):
        conjecture_probe(4, 3, 5)
