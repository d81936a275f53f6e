import json

import pytest

from awdaha import cli
from awdaha.errors import NotDivisible
from awdaha.verify import Check, SuiteReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_p0(capsys):
    code, out, _ = run(capsys, "eval", "--family", "P:0")
    assert code == 0
    assert json.loads(out) == [{"exp": 0, "num": "1", "den": "1"}]


def test_eval_apply_text(capsys):
    code, out, _ = run(capsys, "eval", "--family", "P:0", "--apply", "D", "--format", "text")
    assert code == 0 and out.strip() == "z^0\t841"


def test_eval_nonsymmetric_window(capsys):
    _, out, _ = run(capsys, "eval", "--family", "E:-2")
    assert [t["exp"] for t in json.loads(out)][::3] == [-2, 1]


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "--algebra", "daha_t", "--word", "T1,Z")
    assert code == 0
    got = {tuple(t["word"]): t["num"] + "/" + t["den"] for t in json.loads(out)}
    assert got == {(): "-5/1", ("Zi",): "7/1", ("Zi", "T1"): "1/1"}


def test_table_constants(capsys):
    code, out, _ = run(capsys, "table", "constants")
    rows = {r["name"]: r["value"] for r in json.loads(out)}
    assert code == 0 and rows["E"] == "-81" and rows["C0"] == "225/16"


def test_table_text_recurrence(capsys):
    _, out, _ = run(capsys, "table", "recurrence", "--n-max", "2", "--format", "text")
    lines = out.splitlines()
    assert lines[0].split() == ["n", "beta", "gamma"]
    assert len(lines) == 4 and len(lines[1].split()) == 2


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "qdiff_equation", "--family-max", "3",
                       "--trials", "1", "--format", "text")
    assert code == 0 and out.startswith("qdiff_equation") and " pass " in out


def test_degenerate_params_exit_2(capsys):
    code, _, err = run(capsys, "table", "eigenvalues", "--params", "1,1,1,1,1")
    assert code == 2 and "degenerate parameters: q = 1" in err


def test_bad_params_exit_2(capsys):
    code, _, err = run(capsys, "table", "eigenvalues", "--params", "1/2,2")
    assert code == 2 and "expected 5" in err


def test_failed_suite_exit_1(capsys, monkeypatch):
    bad = SuiteReport("qdiff_equation", None, 12, 0, 0, [Check("main/x", "fail", {})], 0)
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: bad)
    monkeypatch.setattr(SuiteReport, "to_json", lambda self: "{}")
    code, _, _ = run(capsys, "verify", "--suite", "qdiff_equation")
    assert code == 1


def test_internal_fault_exit_3(capsys, monkeypatch):
    def boom(*a, **k):
        raise NotDivisible("x")
    monkeypatch.setattr(cli, "family", boom)
    code, _, err = run(capsys, "eval", "--family", "P:1")
    assert code == 3 and "NotDivisible" in err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["reduce", "--algebra", "sl2", "--word", "K0"])
    assert exc.value.code == 2
