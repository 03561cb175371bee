import io
import json

from polarity.cli import main
from polarity.obstructions import load_catalog
from polarity.oracle import SKBound

F = {e.name: e.graph6 for e in load_catalog() if e.bound == SKBound(2, 2)}
C5 = "Dhc"
K33 = "EFz_"


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_recognize(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["recognize"], "A_\n")
    assert code == 0 and "cograph: yes" in out
    code, out, _ = run(monkeypatch, capsys, ["recognize"], C5 + "\n")
    assert "p4-sparse: no (witness [0, 1, 2, 3, 4])" in out and "p4-extendible: yes" in out


def test_bad_graph6_exits_2(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["recognize"], "A\n")
    assert code == 2 and "error" in err


def test_batch_keeps_order_and_reports_worst_status(monkeypatch, capsys):
    code, out, err = run(monkeypatch, capsys, ["recognize", "--json"], "A_\nA\nD??\n")
    lines = [json.loads(x) for x in out.splitlines()]
    assert [x["input"] for x in lines] == ["A_", "A", "D??"]
    assert "error" in lines[1] and code == 2


def test_max(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["max", "--property", "polar"], F["F1"] + "\n")
    assert code == 0 and "size=7" in out
    code, out, _ = run(monkeypatch, capsys, ["max", "--property", "unipolar", "--json"], C5 + "\n")
    assert json.loads(out)["size"] == 4


def test_max_verify(monkeypatch, capsys):
    import random

    from polarity.generate import random_p4_sparse
    from polarity.graph import emit_graph6

    g6 = emit_graph6(random_p4_sparse(10, random.Random(0)))
    code, out, _ = run(monkeypatch, capsys, ["max", "--property", "monopolar", "--verify"], g6 + "\n")
    assert code == 0 and "verified" in out


def test_max_errors(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["max", "--property", "planar"], C5 + "\n")
    assert code == 2 and "unknown property" in err
    # P6 is in neither class
    code, _, err = run(monkeypatch, capsys, ["max", "--property", "polar", "--format", "edgelist"], "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n")
    assert code == 2 and "neither P4-sparse nor P4-extendible" in err


def test_check2polar(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["check2polar"], F["F26"] + "\n")
    assert code == 1 and out.startswith("NOT 2-polar: contains F26")
    code, out, _ = run(monkeypatch, capsys, ["check2polar"], F["F13"] + "\n")
    assert code == 1 and "contains F13" in out
    code, out, _ = run(monkeypatch, capsys, ["check2polar"], K33 + "\n")
    assert code == 0 and out.strip() == "2-polar: A=[0, 1, 2, 3, 4, 5], B=[]"


def test_worker_pool(monkeypatch, capsys):
    monkeypatch.setenv("POLARITY_THREADS", "2")
    stdin = "\n".join([F["F1"], K33, F["F26"], C5]) + "\n"
    code, out, _ = run(monkeypatch, capsys, ["check2polar", "--json"], stdin)
    rows = [json.loads(x) for x in out.splitlines()]
    assert [r["two_polar"] for r in rows] == [False, True, False, True]
    assert code == 1


def test_tree(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["tree"], C5 + "\n")
    assert code == 0 and "extension C5" in out
    code, out, _ = run(monkeypatch, capsys, ["tree", "--shape", "ps"], C5 + "\n")
    assert code == 2


def test_catalog_verify(monkeypatch, capsys, tmp_path):
    code, out, _ = run(monkeypatch, capsys, ["catalog-verify"])
    assert code == 0 and out.strip() == "50 P4-sparse, 82 P4-extendible, OK"
    code, out, _ = run(monkeypatch, capsys, ["catalog-verify", "--family", "2,1"])
    assert code == 0 and out.strip() == "9 P4-sparse, 13 P4-extendible, OK"
    lines = [e.line() for e in load_catalog()]
    lines = [ln.replace(F["F3"], F["F4"]) if ln.startswith("F3 ") else ln for ln in lines]
    bad = tmp_path / "cat.txt"
    bad.write_text("\n".join(lines) + "\n")
    code, out, _ = run(monkeypatch, capsys, ["catalog-verify", "--catalog", str(bad)])
    assert code == 1
    assert "F3: isomorphic to F4" in out or "F4: isomorphic to F3" in out


def test_mine(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["mine", "-n", "7", "--class", "p4-sparse"])
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 11 and lines[-1] == "# order 7: 10 minimal obstructions"
    code, _, err = run(monkeypatch, capsys, ["mine", "-n", "10"])
    assert code == 2 and "capped" in err


def test_usage_errors(monkeypatch, capsys):
    assert run(monkeypatch, capsys, [])[0] == 2
    assert run(monkeypatch, capsys, ["frobnicate"])[0] == 2
    assert run(monkeypatch, capsys, ["mine"])[0] == 2
