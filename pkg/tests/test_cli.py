"""Exit codes and output contracts of the command-line front end."""
from __future__ import annotations

import json

import pytest

from conftest import planted
from waringvec import cli


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_perfect_text_and_json(capsys):
    code, out, _ = run(capsys, ["perfect", "-n", "2", "3", "3", "4"])
    assert code == 0
    assert "k=7" in out
    assert out.startswith("# command=perfect seed=0")
    code, out, _ = run(capsys, ["perfect", "-n", "2", "3", "3", "4", "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["k"] == 7 and obj["perfect"] is True
    assert obj["config"]["command"] == "perfect"


def test_perfect_on_imperfect_signature(capsys):
    code, out, _ = run(capsys, ["perfect", "-n", "2", "3", "4", "--json"])
    assert code == 0
    assert json.loads(out)["perfect"] is False


def test_defect_json_and_exit(capsys):
    code, out, _ = run(capsys, ["defect", "-n", "3", "2", "4", "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["defect"] == 2
    assert obj["confidence"] == "probabilistic"


def test_k_override_is_validated(capsys):
    code, _, err = run(capsys, ["defect", "-n", "2", "3", "3", "4", "--k", "6"])
    assert code == 2
    assert "k=7" in err
    code, _, _ = run(capsys, ["defect", "-n", "2", "3", "3", "4", "--k", "7"])
    assert code == 0


def test_imperfect_case_is_a_validation_error(capsys):
    code, _, err = run(capsys, ["count", "-n", "2", "3", "4"])
    assert code == 2
    assert "not perfect" in err


def test_defective_case_exit_code(capsys):
    code, _, err = run(capsys, ["count", "-n", "3", "2", "4"])
    assert code == 2
    assert "defective" in err


def test_count_json(capsys):
    code, out, _ = run(capsys, ["count", "-n", "1", "2", "5", "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["k"] == 3 and obj["count"] == 1
    assert obj["status"] == "stabilized"
    assert obj["loops"] >= 15 and obj["path_failures"] >= 0


def test_count_dump_solutions(capsys, tmp_path):
    dump = tmp_path / "sols.json"
    code, _, _ = run(capsys, ["count", "-n", "1", "2", "5", "--json",
                              "--dump-solutions", str(dump)])
    assert code == 0
    data = json.loads(dump.read_text())
    assert len(data["solutions"]) == 1
    assert data["solutions"][0]["residual"] < 1e-8


def test_decompose_roundtrip(capsys, tmp_path):
    f, dec = planted((3, 3, 4), 3, 7, seed=60)
    path = tmp_path / "f.json"
    f.save(path)
    code, out, _ = run(capsys, ["decompose", str(path), "--json"])
    assert code == 0
    obj = json.loads(out)
    assert len(obj["forms"]) == 7
    assert len(obj["lambdas"]) == 7
    assert obj["residual"] < 1e-8


def test_decompose_special_vector_exit(capsys, tmp_path):
    import numpy as np
    from waringvec import rand
    from waringvec.polycore import PolyVector
    rng = rand.rng_for(11, 0)
    ells = rand.crandn(rng, 7, 3)
    ells[3] = ells[0]
    f = PolyVector.from_summands(ells, rand.crandn(rng, 7, 3), (3, 3, 4))
    path = tmp_path / "special.json"
    f.save(path)
    code, _, err = run(capsys, ["decompose", str(path)])
    assert code == 2
    assert "special" in err or "rank" in err


def test_pair_roberts_case(capsys):
    code, out, _ = run(capsys, ["pair", "1", "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["k"] == 4 and obj["bound"] == 1 and obj["count"] == 1
    assert obj["count_status"] == "stabilized"


def test_pair_beyond_count_range(capsys):
    code, out, _ = run(capsys, ["pair", "3", "--json", "--count-max-t", "0"])
    assert code == 0
    obj = json.loads(out)
    assert obj["k"] == 16 and obj["bound"] == 8
    assert obj["count"] is None


def test_pair_mismatch_exit_code(capsys, monkeypatch):
    # a count below the bound must exit 4; force one via a fake counter
    from waringvec.homotopy.monodromy import CountResult

    def fake_count(case, seed, budget, stall, workers=1):
        return CountResult(4, 0, "budget-exhausted", budget, 0, None)

    monkeypatch.setattr(cli, "count_decompositions", fake_count)
    code, _, _ = run(capsys, ["pair", "1", "--json"])
    assert code == 4


def test_table_fast_tier(capsys):
    code, out, _ = run(capsys, ["table", "--rows", "4,6", "--json"])
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert lines[0]["config"]["command"] == "table"
    assert {row["index"] for row in lines[1:]} == {4, 6}
    assert all(row["status"] == "pass" for row in lines[1:])


def test_table_text_output(capsys):
    code, out, _ = run(capsys, ["table", "--rows", "4", "--rows", "5"])
    assert code == 0
    assert "pass" in out
    assert out.startswith("# command=table")


def test_table_failure_exit_code(capsys, monkeypatch):
    from waringvec.tables import RowReport, load_table

    def fake_run_table(rows, seed, tier, budget, stall, workers):
        row = load_table()[0]
        return [RowReport(row, "fail", {"delta": 9}, 0.0)]

    monkeypatch.setattr(cli, "run_table", fake_run_table)
    code, _, _ = run(capsys, ["table", "--rows", "1"])
    assert code == 4


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, ["perfect", "-n", "2", "4", "5", "--json",
                                "--out", str(target)])
    assert code == 0
    assert out == ""
    obj = json.loads(target.read_text())
    assert obj["k"] == 9


def test_runs_are_reproducible(capsys):
    _, out1, _ = run(capsys, ["count", "-n", "1", "2", "5", "--json", "--seed", "5"])
    _, out2, _ = run(capsys, ["count", "-n", "1", "2", "5", "--json", "--seed", "5"])
    assert out1 == out2
