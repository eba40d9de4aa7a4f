"""The bundled results registry and its reproduction harness."""
from __future__ import annotations

import pytest

from waringvec.combinatorics import CaseSpec
from waringvec.tables import TIERS, format_reports, load_table, run_row, run_table


def test_registry_is_complete_and_consistent():
    rows = load_table()
    assert len(rows) == 24
    assert [r.index for r in rows] == list(range(1, 25))
    kinds = {"defect", "count", "bound", "formula", "open"}
    for row in rows:
        assert row.kind in kinds
        assert row.tier in TIERS
        case = CaseSpec(row.n, row.degrees)
        assert case.r == row.r
        assert case.k == row.k
        if row.kind in ("count", "formula"):
            assert row.count is not None and row.count >= 1
        if row.kind == "bound":
            assert row.bound is not None and row.bound >= 2
        if row.kind == "defect":
            assert row.delta > 0
        else:
            assert row.delta == 0


def test_registry_kind_census():
    rows = load_table()
    by_kind = {}
    for r in rows:
        by_kind.setdefault(r.kind, []).append(r.index)
    assert len(by_kind["defect"]) == 6
    assert len(by_kind["formula"]) == 8
    assert len(by_kind["bound"]) == 2
    assert len(by_kind["open"]) == 2
    assert len(by_kind["count"]) == 6


def test_formula_rows_verify_without_homotopy():
    rows = {r.index: r for r in load_table()}
    rep = run_row(rows[16], seed=0, tier="fast")     # seven quadrics, count 8
    assert rep.status == "pass"
    assert rep.observed["method"] == "veronese"
    rep = run_row(rows[6], seed=0, tier="fast")      # (3,3,4), count 1
    assert rep.status == "pass"
    assert rep.observed["method"] == "apolarity"
    assert rep.observed["residual"] < 1e-8


def test_defect_row_passes_and_count_row_skips_at_fast_tier():
    rows = {r.index: r for r in load_table()}
    rep = run_row(rows[4], seed=0, tier="fast")
    assert rep.status == "pass" and rep.observed["delta"] == 2
    rep = run_row(rows[1], seed=0, tier="fast")      # (4,5) count needs gating
    assert rep.status == "skipped"
    rep = run_row(rows[12], seed=0, tier="fast")     # open row never fails
    assert rep.status == "open"


def test_run_table_selection_and_format():
    reports = run_table(rows=[4, 5, 10], seed=0, tier="fast")
    assert [rep.row.index for rep in reports] == [4, 5, 10]
    assert all(rep.status == "pass" for rep in reports)
    text = format_reports(reports)
    assert text.count("\n") >= 4
    assert "defect 2" in text
    obj = reports[0].to_json()
    assert obj["index"] == 4 and obj["status"] == "pass"


def test_run_table_validates_arguments():
    with pytest.raises(ValueError):
        run_table(rows=[99], tier="fast")
    with pytest.raises(ValueError):
        run_table(tier="bogus")


def test_row_concurrency_matches_serial():
    serial = run_table(rows=[4, 5, 10, 14], seed=0, tier="fast", workers=1)
    threaded = run_table(rows=[4, 5, 10, 14], seed=0, tier="fast", workers=4)
    for a, b in zip(serial, threaded):
        assert a.status == b.status
        assert a.observed["delta"] == b.observed["delta"]
