import json

import pytest

from chainmail.cli import main
from chainmail.complex import are_isomorphic, loads
from chainmail.graphs import dumps_graph, double_directed_string
from chainmail.trees import star_tree
from chainmail.verify import delta_L


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_delta_L(capsys):
    code, out, _ = run(capsys, "build", "--family", "delta-L", "--t", "3")
    assert code == 0
    K = loads(out)
    assert K == delta_L(3) and len(K.vertices) == 6
    assert "# euler: 0" in out


def test_build_to_file_and_homology(tmp_path, capsys):
    path = tmp_path / "k.txt"
    code, out, _ = run(capsys, "build", "--family", "delta-lambda", "--lambda", "3,1,1,1", "--out", str(path))
    assert code == 0 and "f-vector" in out
    code, out, _ = run(capsys, "homology", str(path))
    assert code == 0
    # t = 3 ones on a part of 3: a circle
    assert json.loads(out) == {"1": {"betti": 1, "torsion": []}}


def test_build_from_tree_and_graph(tmp_path, capsys):
    tree = tmp_path / "t.txt"
    tree.write_text(dumps_graph(star_tree(3)))
    assert run(capsys, "build", "--family", "disconnecting", "--tree", str(tree), "--k", "2")[0] == 0
    g = tmp_path / "g.txt"
    g.write_text(dumps_graph(double_directed_string(2)))
    code, out, _ = run(capsys, "build", "--family", "delta-of-graph", "--graph", str(g))
    assert code == 0 and are_isomorphic(loads(out), delta_L(2)) is not None
    code, _, err = run(capsys, "build", "--family", "independence", "--graph", str(g))
    assert code == 2 and "undirected" in err


def test_build_missing_argument(capsys):
    code, _, err = run(capsys, "build", "--family", "delta-L")
    assert code == 2 and "--t" in err


def test_verify_report_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "verify", "prop13", "--max-t", "5", "--report", str(a))[0] == 0
    assert run(capsys, "verify", "prop13", "--max-t", "5", "--report", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["certificate"] == "homology-verified"
    assert data["summary"] == {"total": 6, "passed": 6, "failed": 0}
    assert "wall_time_s" not in data


def test_verify_timing_flag(capsys):
    code, out, _ = run(capsys, "verify", "eq21", "--max-t", "2", "--timing")
    assert code == 0 and "wall_time_s" in json.loads(out)


def test_verify_tail_map_failure_exit_code(capsys):
    code, out, err = run(capsys, "verify", "thm32", "--all-trees-up-to", "4")
    data = json.loads(out)
    assert data["summary"]["total"] == 5
    # the four path-shaped trees pass, the 3-leaf star does not
    assert code == 1 and "4/5" in err


def test_verify_refuses_oversize(capsys, monkeypatch):
    assert run(capsys, "verify", "thm32", "--all-trees-up-to", "11")[0] == 2
    monkeypatch.setenv("CHAINMAIL_MAX_EDGES", "10")
    code, _, err = run(capsys, "verify", "prop13", "--max-t", "6")
    assert code == 2 and "limit" in err


def test_quillen(tmp_path, capsys):
    tree = tmp_path / "t.txt"
    tree.write_text("directed: false\n1 2\n2 3\n")
    code, out, _ = run(capsys, "quillen", "--tree", str(tree))
    assert code == 0 and json.loads(out)["non_cone_fibers"] == []


def test_realize_poset(tmp_path, capsys):
    g = tmp_path / "g.txt"
    g.write_text(dumps_graph(double_directed_string(2)))
    code, out, _ = run(capsys, "realize-poset", "--graph", str(g))
    assert code == 0 and "elements: 4" in out
    c = tmp_path / "c.txt"
    c.write_text("vertices: 3\n1 2\n2 3\n1 3\n")
    assert run(capsys, "realize-poset", "--complex", str(c))[0] == 1


def test_trees(capsys):
    code, out, _ = run(capsys, "trees", "--n", "6")
    assert code == 0 and out.count("directed: false") == 6


def test_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("vertices: x\n")
    assert run(capsys, "homology", str(bad))[0] == 2
    assert run(capsys, "homology", str(tmp_path / "missing"))[0] == 2
    with pytest.raises(SystemExit):
        main(["verify", "nonsense"])
