import json
import subprocess
import sys

import pytest

from lamplight.cli import main
from lamplight.gf2 import GF2Vector
from lamplight.graph import adjacency, format_graph, grid_graph, parse_graph
from lamplight.solver import apply

TRIANGLE = "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 1 3\n" + "".join(f"l {v}\n" for v in range(5))


@pytest.fixture
def gfile(tmp_path):
    def write(text, name="g.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_solve(capsys, gfile):
    path = gfile(format_graph(grid_graph(3, 3)))
    code, rep = run_json(capsys, "solve", path, "--target", "all")
    assert code == 0 and rep["result"]["status"] == "solved"
    presses = GF2Vector.from_str(rep["witnesses"]["presses"])
    assert presses.length == 9
    assert apply(adjacency(grid_graph(3, 3)), presses) == GF2Vector.ones(9)

    code, rep = run_json(capsys, "solve", gfile("n 3\nl 0\nl 1\nl 2\n"), "--target", "101")
    assert code == 0 and rep["witnesses"]["presses"] == "101"

    code, rep = run_json(capsys, "solve", gfile("n 1\n"), "--target", "1")
    assert code == 2 and rep["result"]["status"] == "unsolvable"


def test_parse_error_exit_code(capsys, gfile):
    code, out, err = run(capsys, "solve", gfile("n 2\ne 0 5\n"))
    assert code == 1 and "line 2" in err and out == ""


def test_light_all(capsys, gfile):
    code, rep = run_json(capsys, "light-all", "--constructive", gfile("n 2\ne 0 1\nl 0\nl 1\n"))
    assert code == 0 and rep["result"]["verification"] == "OK"
    assert rep["witnesses"]["presses"] == "01"
    assert rep["result"]["recursion.subproblems"] >= 1
    code, rep = run_json(capsys, "light-all", gfile("n 1\nl 0\n"))
    assert code == 0 and rep["witnesses"]["presses"] == "1"
    code, rep = run_json(capsys, "light-all", "--constructive", gfile("n 2\nl 0\ne 0 1\n"))
    assert code == 2 and rep["result"]["violating_subset"] == [1]


@pytest.mark.parametrize("m, n, controllable, parity, code", [
    (1, 1, True, "odd", 0), (2, 2, True, "odd", 0), (5, 5, False, "even", 2),
])
def test_grid(capsys, m, n, controllable, parity, code):
    got, rep = run_json(capsys, "grid", str(m), str(n))
    assert got == code
    assert rep["result"]["controllable"] is controllable
    assert rep["result"]["tiling_parity"] == parity
    assert rep["result"]["agree"] is True


def test_equiv(capsys, gfile):
    code, rep = run_json(capsys, "equiv", gfile("n 3\nl 0\nl 1\nl 2\n"))
    assert code == 0 and rep["result"]["k"] == 3 and rep["result"]["perm"] == [0, 1, 2]
    assert parse_graph(rep["result"]["graph"]) == parse_graph("n 3\nl 0\nl 1\nl 2\n")
    code, rep = run_json(capsys, "equiv", gfile("n 2\ne 0 1\nl 0\nl 1\n"))
    assert rep["result"]["k"] == 2
    assert parse_graph(rep["result"]["graph"]) == parse_graph("n 2\ne 0 1\nl 0\nl 1\n")
    code, rep = run_json(capsys, "equiv", gfile("n 2\nl 0\nl 1\na 0 1\n"))
    assert rep["result"]["k"] == 2
    assert parse_graph(rep["result"]["graph"]) == parse_graph("n 2\nl 0\nl 1\n")


def test_dark_order(capsys, gfile):
    code, rep = run_json(capsys, "dark-order", gfile(format_graph(grid_graph(2, 2))))
    assert code == 0 and rep["witnesses"]["order"] == [0, 3, 1, 2] and rep["result"]["verified"]
    code, rep = run_json(capsys, "dark-order", gfile(TRIANGLE))
    assert code == 2 and rep["result"]["status"] == "no dark-only ordering exists"
    code, rep = run_json(capsys, "dark-order", gfile("n 1\nl 0\n"))
    assert code == 0 and rep["witnesses"]["order"] == [0]


def test_mikado(capsys, tmp_path):
    code, rep = run_json(capsys, "mikado", "1")
    assert code == 0 and rep["result"]["presses"] == 1 and rep["result"]["lit_lamps"] == 5
    out = tmp_path / "m.pbm"
    code, rep = run_json(capsys, "mikado", "4", "--render", str(out))
    assert code == 0 and rep["result"]["lit_lamps"] == 5
    text = out.read_text().split("\n")
    assert text[0] == "P1" and text[1] == "15 15"
    code, _, err = run(capsys, "mikado", "0")
    assert code == 1 and "k must be at least 1" in err


def test_mikado_lamps_mode(capsys, tmp_path):
    out = tmp_path / "l.pbm"
    run(capsys, "mikado", "3", "--render", str(out), "--mode", "lamps")
    lines = out.read_text().splitlines()
    assert lines[1] == "9 9"
    assert sum(line.split().count("1") for line in lines[2:]) == 5


def test_matchings_max_lit_hypercube(capsys, gfile):
    code, rep = run_json(capsys, "matchings", gfile(format_graph(grid_graph(2, 2))))
    assert code == 0 and rep["result"]["count"] == 7 and rep["result"]["parity"] == "odd"
    code, _, err = run(capsys, "matchings", gfile("n 2\na 0 1\n"))
    assert code == 1
    code, rep = run_json(capsys, "max-lit", gfile("n 2\ne 0 1\nl 0\nl 1\n"))
    assert rep["result"]["k"] == 2 and rep["witnesses"]["lit"] == "11"
    code, rep = run_json(capsys, "hypercube", "4")
    assert rep["result"]["max_lit"] == 8 and rep["result"]["nonempty_press_weights"] == [8]
    assert rep["result"]["lamps"] == 15


def test_text_output_is_aligned_and_stable(capsys, gfile):
    path = gfile(TRIANGLE)
    _, first, _ = run(capsys, "dark-order", path)
    _, second, _ = run(capsys, "dark-order", path)
    assert first == second
    keys = [line.split()[0] for line in first.splitlines()]
    assert keys[0] == "command" and "result.status" in keys
    starts = {line.index(line.split()[1]) for line in first.splitlines() if not line.endswith(":")}
    assert len(starts) == 1


def test_json_flag_after_subcommand(capsys):
    code, out, _ = run(capsys, "grid", "2", "2", "--json")
    assert json.loads(out)["command"] == "grid"


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "lamplight", "--json", "hypercube", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["max_lit"] == 4
