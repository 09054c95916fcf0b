import io
import json

import pytest

from schurcell import basedalg as ba
from schurcell import cli


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out)
    return code, out.getvalue()


def dual_spec(tmp_path, reorder=False, below=True, cycle=False):
    data = json.loads(ba.dumps(ba.builtin("dual_numbers")))
    if below:
        data["cells"][0]["below"] = []
        data["cells"][1]["below"] = ["x"]
    if cycle:
        data["cells"][0]["below"] = ["1"]
    if reorder:
        data["cells"].reverse()
    p = tmp_path / "dual.json"
    p.write_text(json.dumps(data))
    return str(p)


def test_builtin_round_trips():
    code, text = run("builtin", "zigzag")
    assert code == 0
    assert ba.dumps(ba.loads(text)) == text.strip()


def test_validate_builtin_and_broken_spec(tmp_path):
    code, text = run("algebra", "validate", "--builtin", "zigzag")
    assert code == 0 and "C3=pass" in text
    data = json.loads(ba.dumps(ba.builtin("zigzag")))
    Z = ba.builtin("zigzag")
    i, j = Z.index("a_01"), Z.index("a_10")
    data["mult"].append([i, j, Z.index("e_0"), "1/1"])
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(data))
    code, text = run("algebra", "validate", "--spec", str(p))
    assert code == 1 and "fail" in text.lower()


def test_gamma_basis():
    code, text = run("gamma-basis", "--builtin", "dual_numbers", "-d", "2")
    assert code == 0 and len(text.strip().splitlines()) == 3
    code, text = run("gamma-basis", "--builtin", "zigzag", "-d", "2", "--format", "json")
    data = json.loads(text)
    assert code == 0 and len(data["basis"]) == 21


def test_cellular_table(capsys):
    code, text = run("cellular", "--builtin", "zigzag", "-d", "2")
    assert code == 0
    assert "e_1 ∗ (a_01a_10) + a_10 ∗ a_01" in text
    assert len(text.strip().splitlines()) == 2 + 21
    assert "C3=pass" in capsys.readouterr().err


def test_cellular_json_reverify(tmp_path):
    code, text = run("cellular", "--builtin", "dual_numbers", "-n", "2", "-d", "2", "--format", "json")
    assert code == 0
    data = json.loads(text)
    assert data["verification"]["verdicts"] == {"C1": "pass", "C2": "pass", "C3": "pass"}
    p = tmp_path / "z.json"
    p.write_text(text)
    code, again = run("reverify", str(p))
    assert code == 0
    assert again.strip() == cli.canonical_json(data["verification"])
    # tamper with one coordinate
    data["cells"][-1]["elements"][0]["coordinates"][0] = "5/1"
    p.write_text(json.dumps(data))
    code, _ = run("reverify", str(p))
    assert code == 1


def test_reverify_bad_input(tmp_path):
    p = tmp_path / "junk.json"
    p.write_text("{\"n\": 1}")
    assert run("reverify", str(p))[0] == 2
    assert run("reverify", str(tmp_path / "missing.json"))[0] == 2


def test_weyl_rank():
    assert run("weyl-rank", "--lambda", "2,1", "--dim", "2") == (0, "2\n")
    assert run("weyl-rank", "--lambda", "1,1,1", "--dim", "2") == (0, "0\n")
    assert run("weyl-rank", "--lambda", "1,2", "--dim", "2")[0] == 2
    assert run("weyl-rank", "--lambda", "2", "--dim", "0")[0] == 2


def test_cauchy_check():
    code, text = run("cauchy-check", "--dimU", "2", "--dimV", "2", "-d", "2")
    assert code == 0
    lines = text.splitlines()
    assert lines[:2] == ["(2)\t9", "(1,1)\t1"]
    assert "10 = 9 + 1" in lines


def test_wreath():
    code, text = run("wreath", "--builtin", "dual_numbers", "-d", "2")
    assert code == 0 and "dual_numberswrS2: dim 8" in text
    code, text = run("wreath", "--builtin", "k", "-d", "2", "--format", "json", "--tensor-space")
    data = json.loads(text)
    assert code == 0 and data["dim"] == 2
    assert all(v == "pass" for v in data["checks"].values())


def test_limits():
    code, _ = run("cellular", "--builtin", "zigzag", "-n", "2", "-d", "3")
    assert code == 2
    code, _ = run("gamma-basis", "--builtin", "k", "-d", "5")
    assert code == 2
    code, text = run("gamma-basis", "--builtin", "k", "-d", "5", "--force")
    assert code == 0 and len(text.splitlines()) == 1


def test_limit_message_names_sizes(capsys):
    run("cellular", "--builtin", "zigzag", "-n", "2", "-d", "3")
    err = capsys.readouterr().err
    assert "rank 24" in err and "--force" in err


def test_toposort(tmp_path):
    assert run("algebra", "validate", "--spec", dual_spec(tmp_path))[0] == 0
    bad = dual_spec(tmp_path, reorder=True)
    assert run("algebra", "validate", "--spec", bad)[0] == 2
    assert run("algebra", "validate", "--spec", bad, "--toposort")[0] == 0
    cyc = dual_spec(tmp_path, cycle=True)
    assert run("algebra", "validate", "--spec", cyc, "--toposort")[0] == 2


def test_spec_errors(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    assert run("algebra", "validate", "--spec", str(p))[0] == 2
    p.write_text(json.dumps({"name": "x", "basis": ["a"], "dim": 1}))
    assert run("algebra", "validate", "--spec", str(p))[0] == 2
    assert "spec file" in capsys.readouterr().err
    assert run("algebra", "validate", "--spec", str(tmp_path / "nope.json"))[0] == 2
    assert run("algebra", "validate", "--builtin", "octonions")[0] == 2


def test_usage_errors():
    assert run()[0] == 2
    assert run("cellular", "--builtin", "k")[0] == 2
    assert run("--help")[0] == 0
