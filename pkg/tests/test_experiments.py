import csv
import io
import json

import pytest

from leakyforce.experiments import (
    ExperimentReport,
    GuardError,
    audit_report,
    emit_report,
    formula_value,
    run_conjecture_probe,
    run_qd_probe,
    run_resilience_report,
)


def test_formula_values():
    assert [formula_value("kn_pt", 3, t) for t in (2, 3, 4)] == [2, 5, 4]
    assert formula_value("kn_pt", 2, 4) is None
    assert formula_value("kn_pt", 2, 3) == 2
    assert formula_value("kn_ct", 4, 6) == 16
    assert formula_value("kn_kn", 3) == 5


@pytest.mark.parametrize("t,z", [(4, 4), (3, 5)])
def test_resilience_exact_rows(t, z):
    row = run_resilience_report("kn_pt", [3], [t], ell=1).rows[0]
    assert (row["z0"], row["z_ell"], row["resilient"]) == (z, z, True)


def test_resilience_kn_kn():
    row = run_resilience_report("kn_kn", [3], ell=1).rows[0]
    assert row["z_ell"] == 5 and row["t"] is None


def test_resilience_report_three_rows_match_formula():
    report = run_resilience_report("kn_pt", [3], range(2, 5), ell=1)
    assert [r["z0"] for r in report.rows] == [formula_value("kn_pt", 3, t) for t in range(2, 5)]
    assert [r["t"] for r in report.rows] == [2, 3, 4]


def test_verify_mode_and_guards():
    report = run_resilience_report("kn_ct", [4], [6], ell=1, mode="verify")
    row = report.rows[0]
    assert row["verified"] and row["construction_size"] == 16 and row["resilient"]
    with pytest.raises(GuardError):
        run_resilience_report("kn_pt", [5], [6], ell=1)
    with pytest.raises(GuardError):
        run_resilience_report("kn_pt", [7], [10], ell=1, mode="verify")
    with pytest.raises(ValueError):
        run_resilience_report("kn_pt", [3], [4], mode="fast")


def test_verify_mode_records_failures():
    row = run_resilience_report("kn_pt", [3], [4], ell=1, mode="verify").rows[0]
    assert not row["verified"] and not row["resilient"]
    assert row["failure_leaks"] == [[3, 1]]


def test_conjecture_probe_k3_p4():
    row = run_conjecture_probe("kn-pt-2resilience", {"n": 3, "t": 4}).rows[0]
    assert row["z0"] == row["z1"] == 4
    assert row["z0"] <= row["z1"] <= row["z2"]
    assert row["conjecture_holds"] == (row["z2"] > 4)


def test_conjecture_probe_cycle_and_product_bound():
    row = run_conjecture_probe("kn-ct-2resilience", {"n": 3, "t": 4}).rows[0]
    assert row["z0"] == 8 and row["z0"] <= row["z1"] <= row["z2"]
    row = run_conjecture_probe("product-bound", {"g": "complete:3", "h": "complete:3", "ell": 1}).rows[0]
    assert row["z_product"] == 5
    assert row["bound_holds"] == (5 <= row["z_g"] * row["z_h"])
    with pytest.raises(GuardError):
        run_conjecture_probe("kn-pt-2resilience", {"n": 4, "t": 5})
    with pytest.raises(ValueError):
        run_conjecture_probe("nope", {})


def test_qd_exact_prints_both_sides():
    rows = run_qd_probe([3], "exact").rows
    assert rows[0]["value"] == 6
    assert rows[0]["formula"] == 4
    assert rows[0]["matches_quoted"] and not rows[0]["matches_formula"]
    with pytest.raises(GuardError):
        run_qd_probe([5], "exact")


def test_qd_candidate_rows_are_data():
    rows = run_qd_probe([5], "candidate").rows
    assert [r["variant"] for r in rows] == ["primary", "alternate"]
    for r in rows:
        assert r["size"] == 18 and isinstance(r["passed"], bool)
        assert r["provenance"] == "drawing-transcription-unverified"


def test_emit_formats():
    empty = ExperimentReport("empty", {})
    doc = json.loads(emit_report(empty, "json"))
    assert doc == {"experiment": "empty", "schema_version": 1, "params": {}, "rows": []}
    one = ExperimentReport("x", {"a": 1}, [{"n": 3, "coords": [[1, 2]], "ok": True, "seconds": 0.5}])
    lines = emit_report(one, "csv").splitlines()
    assert len(lines) == 2
    assert next(csv.reader(io.StringIO(lines[1]))) == ["3", "[[1,2]]", "true"]
    assert "seconds" in emit_report(one, "csv", include_timings=True)
    assert "n" in emit_report(one, "table")
    with pytest.raises(ValueError):
        emit_report(one, "xml")


def test_json_is_byte_identical_across_runs():
    a = emit_report(run_resilience_report("kn_pt", [3, 4], [2, 3], ell=1), "json")
    b = emit_report(run_resilience_report("kn_pt", [3, 4], [2, 3], ell=1), "json")
    assert a == b
    a = emit_report(run_qd_probe([3], "heuristic", seed=4), "json")
    assert a == emit_report(run_qd_probe([3], "heuristic", seed=4), "json")


def test_audit_round_trip():
    reports = [
        run_resilience_report("kn_pt", [3, 4], [2, 3, 4], ell=1),
        run_resilience_report("kn_ct", [4, 5], [4, 5], ell=1, mode="verify"),
        run_conjecture_probe("kn-pt-2resilience", {"n": 3, "t": 4}),
        run_conjecture_probe("product-bound", {"g": "complete:3", "h": "path:3", "ell": 1}),
        run_qd_probe([3, 4], "exact"),
        run_qd_probe([3, 4, 5], "candidate"),
    ]
    for report in reports:
        reloaded = ExperimentReport.from_dict(json.loads(emit_report(report, "json")))
        checks = audit_report(reloaded)
        assert checks
        assert all(c["claimed"] == c["recomputed"] for c in checks)
