import json
import subprocess
import sys

import pytest

from heptaknot.cli import main
from heptaknot.pointfile import read_records, write_points
from heptaknot.radon import PenetrationTable

from conftest import DATA


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out.strip() else None, json.loads(err) if err.strip() else None


@pytest.fixture
def pointfile(tmp_path):
    def make(points, name="pts.json"):
        path = tmp_path / name
        write_points(path, points)
        return path
    return make


def test_classify_moment_curve(capsys):
    code, out, _ = run_json(capsys, "classify", DATA / "moment_curve.json")
    assert code == 0
    assert out["knot_class"] == "Unknot"
    assert out["rs_match"] is None
    assert out["determinant"] == 1
    assert out["alexander"] == [1]
    assert out["penetration_table"] == ["xxx"] * 7


@pytest.mark.parametrize("name, pid", [("figure8_rs1", "RS1"), ("figure8_rs2", "RS2"),
                                       ("figure8_rs3", "RS3"), ("rational_figure8", "RS1")])
def test_classify_figure8(capsys, name, pid):
    code, out, _ = run_json(capsys, "classify", DATA / f"{name}.json")
    assert code == 0
    assert out["knot_class"] == "Figure8"
    assert out["determinant"] == 5
    assert out["alexander_text"] == "1 - 3*t + t^2"
    assert out["rs_match"]["pattern"] == pid
    assert set(out["rs_match"]["labeling"]) == {"base", "direction"}
    assert "disagreement" not in out


def test_classify_trefoil_hexagon(capsys):
    code, out, _ = run_json(capsys, "classify", DATA / "trefoil_hexagon.json")
    assert code == 0
    assert out["knot_class"] == "Trefoil"
    assert out["alexander"] == [1, -1, 1]
    assert "penetration_table" not in out


def test_classify_modes(capsys):
    code, out, _ = run_json(capsys, "classify", "--radon-only", DATA / "trefoil_heptagon.json")
    assert code == 0 and out["knot_class"] == "NotFigure8" and "determinant" not in out
    code, out, _ = run_json(capsys, "classify", "--oracle-only", DATA / "trefoil_heptagon.json")
    assert code == 0 and out["knot_class"] == "Trefoil" and "penetration_table" not in out
    code, out, err = run(capsys, "classify", "--format", "text", DATA / "figure8_rs2.json")
    assert code == 0 and out.startswith("knot_class: Figure8")


def test_classify_five_points_exit_2(capsys, pointfile, moment_curve):
    path = pointfile(moment_curve[:5])
    code, out, err = run_json(capsys, "classify", path)
    assert code == 2
    assert out is None
    assert "expected >= 6 points for heptagon/hexagon modes" in err["message"]
    # the oracle alone accepts short polygons
    code, out, _ = run_json(capsys, "classify", "--oracle-only", path)
    assert code == 0 and out["knot_class"] == "Unknot"
    code, _, err = run_json(capsys, "classify", "--radon-only", path)
    assert code == 2


def test_classify_non_general_position(capsys, pointfile):
    path = pointfile([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (2, 3, 7), (5, 1, 9)])
    code, _, err = run_json(capsys, "classify", path)
    assert code == 2
    assert err["violation"] == [0, 1, 2, 3]


def test_classify_bad_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"points": [[1, 2]]}')
    code, _, err = run_json(capsys, "classify", path)
    assert code == 2 and err["error"] == "InputError"


def test_classify_disagreement_exit_3(capsys, monkeypatch):
    import heptaknot.cli as cli
    monkeypatch.setattr(cli, "classify_by_radon", lambda h: None)
    code, out, err = run_json(capsys, "classify", DATA / "figure8_rs1.json")
    assert code == 3
    assert out["disagreement"] is True
    assert err["error"] == "AgreementFailure"


def test_unexpected_determinant_exit_3(capsys, monkeypatch):
    import heptaknot.cli as cli
    monkeypatch.setattr(cli, "knot_determinant", lambda d: 7)
    code, _, err = run_json(capsys, "classify", DATA / "moment_curve.json")
    assert code == 3 and err["error"] == "UnexpectedDeterminant"


def test_table_witness_and_row_shift(capsys):
    code, out, _ = run(capsys, "table", DATA / "figure8_rs1.json", "--labeling", "6,-1")
    assert code == 0
    # the witness labeling realizes RS-I with every sign flipped
    assert out.strip() == "-+x\n+xx\nx-x\n-xx\nx+x\n+xx\nx-x"
    code, ident, _ = run(capsys, "table", DATA / "figure8_rs2.json")
    code, rot, _ = run(capsys, "table", DATA / "figure8_rs2.json", "--labeling", "3,1")
    assert PenetrationTable.parse(rot) == PenetrationTable.parse(ident).shifted(3)
    code, doc, _ = run_json(capsys, "table", DATA / "figure8_rs2.json", "--format", "json")
    assert doc["table"] == ident.split()


def test_table_errors(capsys, pointfile):
    code, _, err = run_json(capsys, "table", DATA / "figure8_rs1.json", "--labeling", "7,1")
    assert code == 2
    code, _, err = run_json(capsys, "table", DATA / "trefoil_hexagon.json")
    assert code == 2
    path = pointfile([(0, 0, 0), (1, 0, 0), (0, 1, 0), (3, 5, 9), (1, 1, 0), (2, 3, 7), (5, 1, 9)])
    code, _, err = run_json(capsys, "table", path)
    assert code == 2 and err["violation"] == [0, 1, 2, 4]


def _strip_timing(records):
    for r in records:
        r.pop("timing")
    return records


def test_census_sample_k7(capsys, tmp_path):
    out = tmp_path / "k7.jsonl"
    code, text, _ = run(capsys, "census", "--sample", 7, "--seed", 1, "--count", 10, "--out", out)
    assert code == 0
    assert "c(f) histogram:" in text
    recs = read_records(out)
    assert len(recs) == 10
    for r in recs:
        assert r["command"] == "census" and r["seed"] == 1
        assert r["report"]["counts"]["Trefoil"] >= 1
        assert sum(r["report"]["counts"].values()) == 360
        assert "census_seconds" in r["timing"]
    again = tmp_path / "again.jsonl"
    run(capsys, "census", "--sample", 7, "--seed", 1, "--count", 10, "--out", again)
    assert _strip_timing(read_records(again)) == _strip_timing(recs)


def test_census_sample_k6_byte_identical(capsys, tmp_path):
    paths = [tmp_path / "a.jsonl", tmp_path / "b.jsonl"]
    for p in paths:
        assert run(capsys, "census", "--sample", 6, "--seed", 1, "--count", 10, "--out", p)[0] == 0

    def lines(p):
        return [json.dumps({k: v for k, v in json.loads(ln).items() if k != "timing"}, sort_keys=True)
                for ln in p.read_text().splitlines()]
    assert lines(paths[0]) == lines(paths[1])
    for r in read_records(paths[0]):
        assert r["report"]["nontrivial"] <= 1


def test_census_jobs_match_serial(capsys, tmp_path):
    serial, par = tmp_path / "s.jsonl", tmp_path / "p.jsonl"
    run(capsys, "census", "--sample", 6, "--seed", 4, "--count", 6, "--out", serial)
    run(capsys, "census", "--sample", 6, "--seed", 4, "--count", 6, "--jobs", 2, "--out", par)
    assert _strip_timing(read_records(serial)) == _strip_timing(read_records(par))


def test_census_file_and_json_summary(capsys):
    code, out, _ = run(capsys, "census", DATA / "figure8_rs1.json", "--format", "json")
    assert code == 0
    record, summary = (json.loads(ln) for ln in out.splitlines())
    assert record["embedding_seed"] is None
    assert record["report"]["counts"]["Figure8"] >= 1
    assert summary["summary"]["best_c_f"] == record["report"]["c_f"]
    assert "lower bound" in summary["summary"]["note"]


def test_census_input_errors(capsys):
    assert run(capsys, "census")[0] == 2
    assert run(capsys, "census", "--sample", 8)[0] == 2


def test_census_disagreement_writes_repro(capsys, monkeypatch, tmp_path):
    import importlib
    census_mod = importlib.import_module("heptaknot.census")
    monkeypatch.setattr(census_mod, "classify_cycle_by_radon", lambda cyc, orient: None)
    code, _, err = run_json(capsys, "census", DATA / "figure8_rs2.json", "--repro-dir", tmp_path)
    assert code == 3
    repro = json.loads(open(err["repro"]).read())
    assert repro["oracle"] == "Figure8"


def test_census_sampling_failure_exit_4(capsys, monkeypatch):
    import importlib
    census_mod = importlib.import_module("heptaknot.census")
    monkeypatch.setattr(census_mod, "MAX_ATTEMPTS", 0)
    assert run(capsys, "census", "--sample", 7, "--count", 1)[0] == 4
    assert run(capsys, "sample", "--n", 7)[0] == 4


def test_sample_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "sample", "--n", 7, "--seed", 3)
    assert code == 0
    path = tmp_path / "s.json"
    assert run(capsys, "sample", "--n", 7, "--seed", 3, "--out", path)[0] == 0
    assert path.read_text() == out
    code, doc, _ = run_json(capsys, "classify", path)
    assert code == 0 and doc["knot_class"] in ("Unknot", "Trefoil", "Figure8")
    assert run(capsys, "sample", "--n", 5)[0] == 2


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "heptaknot.cli", "classify", str(DATA / "figure8_rs3.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["knot_class"] == "Figure8"
