import io
import subprocess
import sys

import numpy as np
import pytest

from helly.bench import HEADER, read_csv
from helly.cli import dispatch, format_graph, parse_cost_text, parse_graph_text
from helly.errors import InputError, NotConnectedError

from helpers import path

P4 = "p 4 3\n0 1\n1 2\n2 3\n"
C4 = "# four-cycle\np 4 4\n0 1\n1 2\n2 3\n3 0\n"


def run(*argv):
    buf = io.StringIO()
    code = dispatch(list(argv), buf)
    return code, buf.getvalue()


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in {"p4": P4, "c4": C4, "bad": "p 3 1\n0 1\n"}.items():
        f = tmp_path / f"{name}.txt"
        f.write_text(text)
        out[name] = str(f)
    return out


def test_parse_graphs():
    assert parse_graph_text("p 2 1\n0 1").edges() == [(0, 1)]
    assert parse_graph_text(P4) == path(4)
    with pytest.raises(NotConnectedError, match="not connected"):
        parse_graph_text("p 3 1\n0 1")


@pytest.mark.parametrize("text, where", [
    ("0 1\n", "line 1"),
    ("p 2 1\n0 x\n", "line 2"),
    ("p 2 1\n\n# c\n0 2\n", "line 4"),
    ("p 2 1\n1 1\n", "self-loop"),
    ("p 3 1\n0 1\n1 2\n", "declares 1"),
    ("", "missing header"),
])
def test_parse_errors(text, where):
    with pytest.raises(InputError, match=where):
        parse_graph_text(text)


def test_parse_costs():
    assert parse_cost_text("", 4).costs.tolist() == [1, 1, 1, 1]
    assert parse_cost_text("0 5\n", 4).costs.tolist() == [5, 1, 1, 1]
    for bad in ("2 -1", "1 1.5", "7 1", "1"):
        with pytest.raises(InputError):
            parse_cost_text(bad, 4)


def test_format_round_trip():
    g = path(6)
    assert parse_graph_text(format_graph(g)) == g


def test_center_and_median(files, tmp_path):
    code, out = run("center", "--graph", files["p4"])
    assert code == 0 and out in ("vertex 1 ecc 2\n", "vertex 2 ecc 2\n")
    code, out = run("median", "--graph", files["p4"], "--verify")
    assert code == 0 and out == "median 1 2 value 4\nverify agree oracle 1 2\n"
    cost = tmp_path / "c.txt"
    cost.write_text("0 5\n")
    assert run("center", "--graph", files["p4"], "--costs", str(cost), "--verify") == (
        0, "vertex 0 ecc 3\nverify agree oracle 3\n")


def test_radius_and_check(files):
    assert run("radius", "--graph", files["p4"], "--k", "2") == (0, "R 2 guarantee [2, 2]\n")
    code, out = run("check", "--graph", files["c4"], "--k", "2")
    assert code == 0 and out.startswith("holds=false")
    assert len(out.split("witness")[1].split()) == 3
    assert run("check", "--graph", files["p4"], "--k", "2")[1].startswith("holds=true")


def test_exit_codes(files, capsys):
    assert run("center", "--graph", files["bad"])[0] == 1
    assert "not connected" in capsys.readouterr().err
    assert run("center", "--graph", files["c4"])[0] == 2
    assert "not found" in capsys.readouterr().err
    assert run("center", "--graph", "/nonexistent")[0] == 1
    assert run("center")[0] == 1
    assert run("radius", "--graph", files["p4"], "--k", "1")[0] == 1
    assert run("--help")[0] == 0


def test_determinism(files):
    for cmd in (["center"], ["median"], ["radius", "--k", "2"]):
        a = run(*cmd, "--graph", files["p4"], "--seed", "7")
        assert a == run(*cmd, "--graph", files["p4"], "--seed", "7")
    assert run("center", "--graph", files["p4"], "--seed", "random")[0] == 0


def test_gen_then_center(tmp_path):
    f = tmp_path / "g.txt"
    assert run("gen", "--family", "interval", "--n", "50", "--seed", "3", "--out", str(f))[0] == 0
    code, out = run("center", "--graph", str(f), "--verify")
    assert code == 0 and "verify agree" in out
    assert run("gen", "--family", "chordal", "--n", "9", "--density", "0.2")[1].startswith("p 9 ")


def test_bench_csv_round_trip(tmp_path):
    f = tmp_path / "b.csv"
    code, _ = run("bench", "--family", "king-grid", "--sizes", "25,100", "--seeds", "0,1",
                  "--commands", "center,median,radius,oracle", "--out", str(f))
    assert code == 0
    with open(f) as fh:
        assert fh.readline().strip().split(",") == HEADER
        fh.seek(0)
        rows = read_csv(fh)
    assert len(rows) == 2 * 2 * 4
    by = {(r["command"], r["n"], r["seed"]): r for r in rows}
    for n in (25, 100):
        for s in (0, 1):
            assert by[("center", n, s)]["value"] == by[("oracle", n, s)]["value"]
            assert by[("radius", n, s)]["R"] == by[("oracle", n, s)]["R"]
    code, text = run("bench", "--family", "king-grid", "--sizes", "25", "--commands", "center")
    assert code == 0 and len(text.splitlines()) == 2
    assert run("bench", "--family", "tree", "--sizes", "9", "--commands", "nope")[0] == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "helly", "gen", "--family", "tree", "--n", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("p 3 2")


def test_backend_flag(files):
    from helly import _backend

    before = _backend.kernels
    try:
        for name in _backend.available():
            assert run("--backend", name, "median", "--graph", files["p4"]) == (
                0, "median 1 2 value 4\n")
            assert _backend.kernels.NAME == name
    finally:
        _backend.kernels = before
