import json

import pytest

import closetlab


def test_fixture_way_below():
    space = closetlab.load("CHAIN3_SHIFT")
    assert len(space) == 3
    assert space.elements == ["0", "1", "2"]
    assert sorted(space.way_below()) == [("0", "0"), ("0", "1"), ("0", "2"), ("1", "2")]
    assert space.is_continuous()
    assert not space.is_interpolating()
    # c({0}) = {0, 1}: bit masks in, bit masks out.
    assert space.c(0b001) == 0b011
    assert space.bracket(0b010) == 0b011


def test_analyze_and_check():
    report = closetlab.analyze("M3_RANEY")
    assert report["n"] == 5
    assert not report["inconsistent"]
    continuity = next(c for c in report["checks"] if c["check"] == "continuity")
    assert continuity["facts"]["continuous"] is False
    assert continuity["witness"] == "top"
    only = closetlab.check("CHAIN3_SHIFT", "interpolation")
    assert [c["witness"] for c in only["checks"]] == ["(1,2)"]


def test_documents_and_round_trip(tmp_path):
    doc = {
        "elements": ["a", "b"],
        "order": [["a", "b"]],
        "c": {"kind": "alexandrov"},
    }
    space = closetlab.load(doc)
    again = closetlab.load(space.to_json())
    assert again.c(0b10) == space.c(0b10) == 0b11
    path = tmp_path / "s.json"
    path.write_text(json.dumps(doc))
    assert len(closetlab.load(str(path))) == 2


def test_errors():
    with pytest.raises(closetlab.ParseError):
        closetlab.load({"elements": ["a"]})
    bad = {"elements": ["0", "1"], "order": [["0", "1"]],
           "c": {"kind": "inflationary", "map": {"0": "0", "1": "0"}}}
    with pytest.raises(closetlab.InvalidStructure):
        closetlab.load(bad)
    with pytest.raises(closetlab.CapError):
        closetlab.search(30, samples=1)
    assert issubclass(closetlab.CapError, closetlab.Error)


def test_search_is_deterministic():
    a = closetlab.search(4, samples=30, seed=5, targets=["theorem_interpolation_idempotent"])
    b = closetlab.search(4, samples=30, seed=5, targets=["theorem_interpolation_idempotent"], threads=1)
    assert a == b
    assert a["inconsistencies"] == 0
    assert a["structures"] + a["skipped"] == 30


def test_names():
    assert "CHAIN3_RANEY" in closetlab.fixture_names()
    assert set(closetlab.theorem_checker_names()) < set(closetlab.checker_names())
    assert "dm_bracket" in closetlab.operator_kinds()
