import json

import pytest

from hurwitzkit.fixtures import FIXTURES, build_fixtures, emit_fixture_suite


def test_all_fixtures_match():
    records = build_fixtures()
    assert {r["name"] for r in records} == set(FIXTURES)
    for r in records:
        assert r["match"], r["name"]


def test_named_fixtures(tmp_path):
    paths = {p.stem: p for p in emit_fixture_suite(tmp_path)}
    h2 = json.loads(paths["H2_33"].read_text())
    assert h2["expected"] == "1/18"
    assert h2["computed"] == {"character_formula": "1/18", "permutation_count": "1/18"}
    assert h2["match"] is True
    h1 = json.loads(paths["H1_unbranched_d3"].read_text())
    assert set(h1["computed"].values()) == {"2/3"}
    sweep = json.loads(paths["two_point_delta"].read_text())
    assert sweep["match"] and max(r["degree"] for r in sweep["computed"]) == 5
    for record in map(json.loads, (p.read_text() for p in paths.values())):
        assert list(record) == ["name", "inputs", "expected", "computed", "match"]


def test_emit_is_byte_stable(tmp_path):
    a = {p.name: p.read_bytes() for p in emit_fixture_suite(tmp_path / "a")}
    b = {p.name: p.read_bytes() for p in emit_fixture_suite(tmp_path / "b")}
    assert a == b


def test_emit_reports_path(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    with pytest.raises(OSError, match=str(blocker)):
        emit_fixture_suite(blocker / "sub")
