import json

import pytest

from thagomizer import closed_forms
from thagomizer.bi_ring import GradedBiSchur
from thagomizer.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_p_thag_text(capsys):
    assert run(capsys, "p-thag", "2", "--format", "text") == (0, "s[2;] + t*s[;2]\n", "")


def test_latex(capsys):
    code, out, _ = run(capsys, "q-thag", "1", "--format", "latex")
    assert code == 0 and out.strip() == r"V_{(1),\varnothing} + V_{\varnothing,(1)}"


@pytest.mark.parametrize("argv", [["p-thag", "-1"], ["p-thag", "11"], ["p-cycle", "1"], ["frobnicate"],
                                  ["ilc", "--max-n", "11"], ["verify", "series", "--order", "20"], []])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "usage" in err


def test_env_guard(capsys, monkeypatch):
    monkeypatch.setenv("THAG_MAX_N", "12")
    code, out, _ = run(capsys, "dims", "p-thag", "12", "--format", "json")
    assert code == 0 and json.loads(out)[1] == 2 ** 12 - 12 - 1
    monkeypatch.setenv("THAG_MAX_N", "3")
    assert run(capsys, "p-thag", "4")[0] == 2
    monkeypatch.setenv("THAG_MAX_N", "lots")
    assert run(capsys, "p-thag", "1")[0] == 2


@pytest.mark.parametrize("family", ["p-thag", "q-thag", "z-thag", "char-thag"])
@pytest.mark.parametrize("n", range(7))
def test_oracle_json_is_byte_identical(capsys, family, n):
    a = run(capsys, family, str(n), "--format", "json")
    b = run(capsys, family, str(n), "--format", "json", "--oracle")
    assert a == b and a[0] == 0


@pytest.mark.parametrize("k", range(2, 9))
def test_cycle_oracle_json(capsys, k):
    assert run(capsys, "p-cycle", str(k), "--format", "json") == run(capsys, "p-cycle", str(k), "--format", "json", "--oracle")


SOURCES = {
    "p-thag": closed_forms.p_thagomizer,
    "q-thag": closed_forms.q_thagomizer,
    "z-thag": closed_forms.z_thagomizer,
    "char-thag": closed_forms.char_poly_thagomizer,
    "p-cycle": closed_forms.c_cycle,
}


@pytest.mark.parametrize("family", sorted(SOURCES))
def test_json_round_trip(capsys, family):
    code, out, _ = run(capsys, family, "5", "--format", "json")
    assert code == 0 and GradedBiSchur.from_json(out) == SOURCES[family](5)


def test_dims(capsys):
    assert run(capsys, "dims", "z-thag", "4")[1].strip() == "1 + 20*t + 62*t^2 + 62*t^3 + 20*t^4 + t^5"
    assert run(capsys, "dims", "char-thag", "1", "--format", "json")[1].strip() == "[2, -3, 1]"


def test_out_file(capsys, tmp_path):
    path = tmp_path / "p3.json"
    code, out, _ = run(capsys, "p-thag", "3", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    assert GradedBiSchur.from_json(path.read_text()) == closed_forms.p_thagomizer(3)


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 10 and all("PASS" in line for line in lines)


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "3", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["passed"] and obj["max_n"] == 3


def test_verify_reports_mismatch(capsys, monkeypatch):
    real = closed_forms.p_thagomizer
    monkeypatch.setattr(closed_forms, "p_thagomizer", lambda n: real(n).shift(1) if n == 3 else real(n))
    code, out, err = run(capsys, "verify", "all", "--max-n", "4")
    assert code == 1
    assert "p-thag: FAIL" in out
    diffs = json.loads(err)
    assert any(d["suite"] == "p-thag closed form vs oracle" and d["n"] == 3 for d in diffs)


def test_verify_series(capsys):
    code, out, _ = run(capsys, "verify", "series", "--order", "4")
    assert code == 0 and out.strip().endswith("overall: PASS")
    code, out, err = run(capsys, "verify", "series", "--order", "4", "--no-type-two")
    assert code == 1 and "modified Z_T palindromic: FAIL" in out


def test_ilc(capsys):
    code, out, _ = run(capsys, "ilc", "--max-n", "6", "--variant", "q", "--strong")
    assert code == 0 and out.strip().endswith("failures: 0")
    code, out, _ = run(capsys, "ilc", "--max-n", "4", "--format", "json")
    assert code == 0 and [(e["n"], e["i"], e["j"]) for e in json.loads(out)] == [(2, 1, 1), (3, 1, 1), (4, 1, 1), (4, 2, 2)]
