import json
import subprocess
import sys

import pytest

from genpos.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_invariants_petersen(capsys):
    code, out, _ = run(capsys, "invariants", "--family", "petersen", "--no-timing")
    assert code == 0
    got = {r["invariant"]: r["value"] for r in rows(out)}
    assert got == {"gp": 6, "gp-": 4, "tp": 6, "tp-": 6}


@pytest.mark.parametrize("family,which,value", [("cycle:5", "gp-", 3), ("complete:4", "geodetic", 4)])
def test_single_invariants(capsys, family, which, value):
    code, out, _ = run(capsys, "invariants", "--family", family, "--which", which, "--no-timing")
    assert code == 0 and rows(out)[0]["value"] == value


def test_output_is_deterministic(capsys):
    args = ("invariants", "--enumerate", "4", "--which", "gp,tp-,geodetic", "--no-timing")
    first = run(capsys, *args)[1]
    second = run(capsys, *args)[1]
    assert first == second and first


def test_jobs_preserve_order(capsys):
    args = ("invariants", "--enumerate", "5", "--which", "gp-", "--no-timing")
    serial = run(capsys, *args)[1]
    parallel = run(capsys, *args, "--jobs", "2")[1]
    assert serial == parallel


def test_csv_format(capsys):
    code, out, _ = run(capsys, "invariants", "--family", "cycle:5", "--which", "gp", "--format", "csv",
                       "--no-timing")
    assert code == 0
    header, first = out.splitlines()[:2]
    assert "graph" in header.split(",") and "cycle:5" in first


def test_cap_is_reported(capsys):
    code, out, _ = run(capsys, "invariants", "--family", "kneser2:7", "--which", "gp-",
                       "--max-subset-size", "2", "--no-timing")
    assert code == 0
    (rec,) = rows(out)
    assert rec["value"] == "INCONCLUSIVE" and "max_subset_size" in rec["cap"]


def test_edge_list_and_graph6_inputs(capsys, tmp_path):
    edges = tmp_path / "c4.txt"
    edges.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    g6 = tmp_path / "in.g6"
    g6.write_text("Ch\nnot graph6\n")
    code, out, _ = run(capsys, "invariants", "--edges", str(edges), "--graph6", str(g6),
                       "--which", "gp", "--no-timing")
    recs = rows(out)
    assert code == 2
    assert any("error" in r for r in recs)
    assert [r["value"] for r in recs if "value" in r] == [2, 2]


@pytest.mark.parametrize("argv", [
    ["invariants", "--family", "cycle:2"],
    ["invariants", "--family", "nosuch:4"],
    ["invariants"],
    ["suite", "nosuch"],
    ["scan", "conjecture-product", "--max-order", "6"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["product", "clique"])
    assert exc.value.code == 2


def test_construct_trace(capsys):
    code, out, err = run(capsys, "construct", "diam3", "--family", "cycle:7", "--trace", "--no-timing")
    assert code == 0
    (rec,) = rows(out)
    assert rec["witness"] == [0, 1, 4]
    assert "# W_2 = {4} | T = {4} | R_pre = {4} | R_post = {4}" in err


def test_construct_wrong_class(capsys):
    assert run(capsys, "construct", "diam2", "--family", "cycle:7")[0] == 2


def test_product_commands(capsys):
    assert run(capsys, "product", "clique", "--orders", "3,4", "--no-timing")[0] == 0
    code, out, _ = run(capsys, "product", "multipartite", "--left-parts", "3,3,3", "--right-parts", "3,3,3")
    assert code == 0 and rows(out)[0]["lower"] <= 3 <= rows(out)[0]["upper"]
    code, out, _ = run(capsys, "product", "layer-check", "--left", "cycle:6", "--right", "complete:2",
                       "--set", "0,3")
    assert code == 0 and rows(out)[0]["terminal"] is False
    code, out, _ = run(capsys, "product", "universal-line", "--left", "path:3", "--right", "cycle:4")
    assert code == 0 and rows(out)[0]["status"] == "PASS"
    code, out, _ = run(capsys, "product", "orthogonal", "--graph", "cycle:6", "--r", "2", "--sets", "0,1;3,4")
    assert code == 0


def test_scan_and_suite(capsys):
    code, out, _ = run(capsys, "scan", "conjecture-product", "--max-order", "3", "--no-timing")
    assert code == 0 and rows(out)[-1]["checked"] == 9
    code, out, _ = run(capsys, "suite", "petersen", "--no-timing")
    assert code == 0 and rows(out)[-1]["failed"] == 0


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "genpos.cli", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip()
