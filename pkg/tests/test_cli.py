"""Exercises the CLI through run(), checking outputs and exit codes.

Exit code contract: 0 success, 1 semantic failure, 2 usage or parse
error, 3 guard exceeded.
"""

import json
import subprocess
import sys

import pytest

from domchrom import Coloring, directed_path, path_base, star_oriented
from domchrom.cli import run
from domchrom.formats import emit_base, emit_coloring, emit_digraph, parse_coloring, parse_digraph


@pytest.fixture
def dpath3(tmp_path):
    p = tmp_path / "dpath3.txt"
    p.write_text(emit_digraph(directed_path(3)))
    return str(p)


def test_solve_text(dpath3, capsys):
    assert run(["solve", dpath3]) == 0
    out = capsys.readouterr().out
    assert out.startswith("value: 3\n")
    assert "witness: " in out


def test_solve_json_envelope(dpath3, capsys):
    assert run(["solve", dpath3, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["command"] == "solve"
    assert payload["inputs"]["digraph"] == dpath3
    out = payload["outputs"]
    assert out["value"] == 3
    assert sorted(out["witness"]) == [0, 1, 2]
    assert out["mode"] == "sink-exempt"
    assert out["nodes_explored"] > 0
    assert isinstance(out["elapsed_ms"], int)


def test_solve_infeasible_is_not_an_error(tmp_path, capsys):
    p = tmp_path / "sinks.txt"
    p.write_text(emit_digraph(star_oriented(2, 0)))
    assert run(["solve", str(p), "--mode", "strict"]) == 0
    assert capsys.readouterr().out == "value: infeasible\n"
    assert run(["solve", str(p), "--mode", "strict", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["outputs"]["value"] is None
    assert payload["outputs"]["witness"] is None


def test_verify_ok(dpath3, tmp_path, capsys):
    c = tmp_path / "good.txt"
    c.write_text(emit_coloring(Coloring([0, 1, 2], 3)))
    assert run(["verify", dpath3, str(c)]) == 0
    assert capsys.readouterr().out == "ok\n"


def test_verify_failure_lists_violations(dpath3, tmp_path, capsys):
    c = tmp_path / "bad.txt"
    c.write_text(emit_coloring(Coloring([0, 0, 1], 2)))
    assert run(["verify", dpath3, str(c)]) == 1
    out = capsys.readouterr().out
    assert "improper arc 0 1" in out
    assert "dominates no class" in out


def test_verify_json_reports_violation_kinds(dpath3, tmp_path, capsys):
    c = tmp_path / "bad.txt"
    c.write_text(emit_coloring(Coloring([0, 0, 1], 2)))
    assert run(["verify", dpath3, str(c), "--json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["outputs"]["ok"] is False
    kinds = {v["kind"] for v in payload["outputs"]["violations"]}
    assert kinds == {"properness", "domination"}


def test_verify_size_mismatch_is_usage_error(dpath3, tmp_path, capsys):
    c = tmp_path / "short.txt"
    c.write_text(emit_coloring(Coloring([0, 1], 2)))
    assert run(["verify", dpath3, str(c)]) == 2
    assert "error:" in capsys.readouterr().err


def test_parse_error_exit_code_and_message(tmp_path, capsys):
    p = tmp_path / "digon.txt"
    p.write_text("digraph 3\n0 1\n1 0\n")
    assert run(["solve", str(p)]) == 2
    err = capsys.readouterr().err
    assert "line 3" in err
    assert "digon" in err


def test_missing_file_is_usage_error(tmp_path, capsys):
    assert run(["solve", str(tmp_path / "absent.txt")]) == 2
    assert "error:" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["sweep", "path"]) == 2  # no size given
    assert run(["sweep", "path", "--n", "4", "--n-min", "3", "--n-max", "5"]) == 2
    assert run(["sweep", "path", "--n-min", "5", "--n-max", "3"]) == 2
    assert run(["--help"]) == 0
    capsys.readouterr()


def test_sweep_text_line(capsys):
    assert run(["sweep", "path", "--n", "6"]) == 0
    out = capsys.readouterr().out
    assert out == (
        "n=6 min=3 max=6 formula=3 match=true orientations=32 infeasible=0\n"
    )


def test_sweep_star_base(capsys):
    assert run(["sweep", "star", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert out == "n=3 min=2 max=3 formula=2 match=true orientations=8 infeasible=0\n"


def test_sweep_csv(capsys):
    assert run(["sweep", "cycle", "--n-min", "4", "--n-max", "6", "--csv"]) == 0
    out = capsys.readouterr().out
    assert out == (
        "n,min,max,formula,matches_formula,orientations,infeasible\n"
        "4,2,4,2,true,16,0\n"
        "5,3,5,3,true,32,0\n"
        "6,3,6,3,true,64,0\n"
    )


def test_sweep_json_rows(capsys):
    assert run(["sweep", "path", "--n", "4", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["command"] == "sweep"
    (row,) = payload["outputs"]["rows"]
    assert row["n"] == 4
    assert row["min_value"] == 3
    assert row["max_value"] == 4
    assert row["matches_formula"] is True
    assert all(len(code) == 3 for code in row["argmin_codes"])
    assert all(set(code) <= {"0", "1"} for code in row["argmin_codes"])
    assert all(isinstance(k, str) for k in row["distribution"])
    assert sum(row["distribution"].values()) == 8


def test_sweep_strict_mode(capsys):
    assert run(["sweep", "path", "--n", "4", "--mode", "strict"]) == 0
    out = capsys.readouterr().out
    assert out == (
        "n=4 min=None max=None formula=3 match=false orientations=8 infeasible=8\n"
    )


def test_sweep_guard_exit_code(capsys):
    assert run(["sweep", "path", "--n", "30"]) == 3
    err = capsys.readouterr().err
    assert "guard" in err
    assert "DOMCHROM_MAX_SWEEP_EDGES" in err


def test_family_text(capsys):
    assert run(["family", "path", "7"]) == 0
    out = capsys.readouterr().out
    assert "family: path [7]" in out
    assert "claimed value: 4" in out


def test_family_emitted_files_verify(tmp_path, capsys):
    assert run(["family", "cycle", "9", "--emit-digraph"]) == 0
    digraph_text = capsys.readouterr().out
    assert run(["family", "cycle", "9", "--emit-witness"]) == 0
    witness_text = capsys.readouterr().out
    d = parse_digraph(digraph_text)
    c = parse_coloring(witness_text)
    assert d.n == 9
    assert c.k == 5
    dp = tmp_path / "d.txt"
    cp = tmp_path / "c.txt"
    dp.write_text(digraph_text)
    cp.write_text(witness_text)
    assert run(["verify", str(dp), str(cp)]) == 0
    capsys.readouterr()


def test_family_emit_both_streams_in_order(capsys):
    assert run(["family", "path", "4", "--emit-digraph", "--emit-witness"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph 4\n")
    assert "coloring 4 3\n" in out


def test_family_directed_variant(capsys):
    assert run(["family", "path", "5", "--directed", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["outputs"]["claimed_value"] == 5
    assert payload["outputs"]["witness"] == [0, 1, 2, 3, 4]
    assert run(["family", "star", "3", "0", "--directed"]) == 2
    capsys.readouterr()


def test_family_bad_parameters(capsys):
    assert run(["family", "star", "2", "3"]) == 2
    assert run(["family", "wheel", "5"]) == 2
    assert run(["family", "path"]) == 2
    capsys.readouterr()


def test_formulas_text_and_csv(capsys):
    assert run(["formulas", "path", "--n-min", "1", "--n-max", "4"]) == 0
    assert capsys.readouterr().out == (
        "n=1 value=1\nn=2 value=2\nn=3 value=2\nn=4 value=3\n"
    )
    assert run(["formulas", "cycle", "--n-min", "3", "--n-max", "6", "--csv"]) == 0
    assert capsys.readouterr().out == "n,value\n3,3\n4,2\n5,3\n6,3\n"
    assert run(["formulas", "cycle", "--n", "2"]) == 2
    capsys.readouterr()


def test_invariants_digraph(tmp_path, capsys):
    p = tmp_path / "d.txt"
    p.write_text(emit_digraph(directed_path(4)))
    assert run(["invariants", str(p)]) == 0
    assert capsys.readouterr().out == (
        "dominator value: 4\nchromatic value: 2\ngap: 2\n"
    )


def test_invariants_star_aggregate(tmp_path, capsys):
    p = tmp_path / "base.txt"
    p.write_text(emit_base(path_base(5)))
    assert run(["invariants", "--base", str(p), "--star"]) == 0
    out = capsys.readouterr().out
    assert "min over orientations: 3" in out
    assert "max over orientations: 5" in out
    assert "spread: 2" in out
    assert "table value: 2" in out


def test_invariants_semantic_failure(tmp_path, capsys):
    p = tmp_path / "sinks.txt"
    p.write_text(emit_digraph(star_oriented(2, 0)))
    assert run(["invariants", str(p), "--mode", "strict"]) == 1
    assert "error:" in capsys.readouterr().err


def test_invariants_argument_combinations(tmp_path, capsys):
    p = tmp_path / "d.txt"
    p.write_text(emit_digraph(directed_path(3)))
    b = tmp_path / "b.txt"
    b.write_text(emit_base(path_base(3)))
    assert run(["invariants"]) == 2
    assert run(["invariants", "--star"]) == 2
    assert run(["invariants", str(p), "--base", str(b), "--star"]) == 2
    capsys.readouterr()


def test_mine_discrepancy_rows(capsys):
    code = run(["mine-discrepancy", "--family", "tilde-cycle", "--n-min", "6", "--n-max", "8"])
    assert code == 0
    assert capsys.readouterr().out == (
        "n=6 host=3 sub=6 discrepancy=3\n"
        "n=7 host=4 sub=7 discrepancy=3\n"
        "n=8 host=3 sub=8 discrepancy=5\n"
    )


def test_mine_discrepancy_csv(capsys):
    code = run(
        ["mine-discrepancy", "--family", "tilde-cycle", "--n", "6", "--csv"]
    )
    assert code == 0
    assert capsys.readouterr().out == (
        "n,host_value,sub_value,discrepancy\n6,3,6,3\n"
    )


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "domchrom.cli", "sweep", "path", "--n", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("n=4 min=3")
