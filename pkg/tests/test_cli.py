"""Command line interface, driven through main(argv)."""

import json

import pytest

import ldpsurf.cli as cli
from ldpsurf import (LatticePolygon, TableRow, canonical_polygon,
                     format_polygon_text, mirror_quad, parse_ideal)

SQUARE = LatticePolygon(((1, 1), (-1, 1), (-1, -1), (1, -1)))


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_polygon(tmp_path, polygon, name="poly.txt"):
    path = tmp_path / name
    path.write_text(format_polygon_text(polygon))
    return str(path)


def test_analyze_canonical_text(capsys):
    code, out, err = run(capsys, "analyze", "--canonical", "1", "1")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "vertices: (-1,0) (1,-1) (1,1)"
    assert "picard rank: 1" in lines
    assert "index: 1" in lines
    assert "K^2: 8" in lines
    assert "singular cones: 1" in lines
    assert ("  cone 2: rays (1,-1),(1,1)  type (1,2)  "
            "singularity 1/2(1,1)  local index 1") in lines
    assert "graph: [2] - [0] -(1,2)- [0] -" in lines
    assert "polar vertices: (-1/1, 0/1) (1/1, -2/1) (1/1, 2/1)" in lines
    assert ("embedding: ambient dimension 8, degree 8, boundary points 8, "
            "sectional genus 1") in lines
    assert "quadrics: 20" in lines
    assert "classification: k=1 p=1 (standard form, mu=3)" in lines
    assert any(line.startswith("  transform: [[") for line in lines)


def test_analyze_fractional_k2(capsys):
    code, out, _ = run(capsys, "analyze", "--canonical", "1", "2")
    assert code == 0
    assert "K^2: 25/3" in out.splitlines()
    assert "index: 3" in out.splitlines()


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--canonical", "1", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["picard"] == 1
    assert payload["k2"] == "8/1"
    assert payload["embedding"]["quadrics"] == 20
    assert payload["embedding"]["ambient_dim"] == 8
    assert payload["classification"]["k"] == 1
    assert payload["classification"]["normal_form"] == "standard"
    assert payload["singularities"][0]["type"] == "1/2(1,1)"
    assert payload["vertices"] == [[-1, 0], [1, -1], [1, 1]]


def test_analyze_from_file(capsys, tmp_path):
    path = write_polygon(tmp_path, canonical_polygon(3, 2))
    code, out, _ = run(capsys, "analyze", path)
    assert code == 0
    assert "picard rank: 3" in out.splitlines()
    assert "classification: k=3 p=2 (standard form, mu=4)" in out


def test_analyze_multi_singularity_reports_none(capsys, tmp_path):
    path = write_polygon(tmp_path, SQUARE)
    code, out, _ = run(capsys, "analyze", path)
    assert code == 0
    assert "singular cones: 4" in out.splitlines()
    assert "classification: not a one-singularity polygon" in out.splitlines()


def test_classify_file(capsys, tmp_path):
    path = write_polygon(tmp_path, mirror_quad(3))
    code, out, _ = run(capsys, "classify", path)
    assert code == 0
    assert out.splitlines()[0] == "k=2 p=3 (mirror form, mu=3)"
    assert out.splitlines()[1].startswith("transform: [[")


def test_classify_json(capsys, tmp_path):
    path = write_polygon(tmp_path, canonical_polygon(2, 5))
    code, out, _ = run(capsys, "classify", path, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["k"] == 2 and payload["p"] == 5
    assert payload["normal_form"] == "standard"
    assert isinstance(payload["transform"], list)


def test_classify_wrong_count_exits_3(capsys, tmp_path):
    path = write_polygon(tmp_path, SQUARE)
    code, out, err = run(capsys, "classify", path)
    assert code == 3
    assert out == ""
    assert err.startswith("error:")


def test_bad_inputs_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("hello world\n")
    assert run(capsys, "analyze", str(bad))[0] == 2
    assert run(capsys, "analyze", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "analyze")[0] == 2  # no file, no --canonical
    code, _, err = run(capsys, "analyze", "--canonical", "9", "1")
    assert code == 2 and err.startswith("error:")


def test_quadrics_stdout(capsys):
    code, out, _ = run(capsys, "quadrics", "--canonical", "2", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# minimal quadric generating system"
    assert lines[1] == ("# ambient_dim=7 degree=7 generators=14 "
                        "sectional_genus=1")
    assert len(lines) == 16
    assert len(parse_ideal(out)) == 14


def test_quadrics_out_file(capsys, tmp_path):
    dest = tmp_path / "ideal.txt"
    code, out, _ = run(capsys, "quadrics", "--canonical", "2", "1",
                       "--out", str(dest), "--no-verify-rank")
    assert code == 0
    assert out.strip() == f"14 generators written to {dest}"
    assert len(parse_ideal(dest.read_text())) == 14


def test_quadrics_from_file(capsys, tmp_path):
    path = write_polygon(tmp_path, canonical_polygon(3, 1))
    code, out, _ = run(capsys, "quadrics", path, "--verify-rank")
    assert code == 0
    assert len(parse_ideal(out)) == 9


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--pmax", "3")
    assert code == 0
    assert out.strip() == "54 checks passed"


def test_tables_mismatch_exits_4(capsys, monkeypatch):
    monkeypatch.setattr(cli, "table_formulas",
                        lambda k, p: TableRow(0, 0, 0, 0, 0, 0))
    code, out, err = run(capsys, "tables", "--pmax", "1")
    assert code == 4
    assert "MISMATCH" in out
    assert err.startswith("internal error:")


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--bound", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "bound=1: 16 polygons in 3 isomorphism classes"
    assert "  k=1 p=1: 1 class(es)" in lines
    assert "  k=2 p=1: 1 class(es)" in lines
    assert "  k=3 p=1: 1 class(es)" in lines


def test_argparse_errors():
    with pytest.raises(SystemExit):
        cli.main([])
    with pytest.raises(SystemExit):
        cli.main(["analyze", "--bogus"])
