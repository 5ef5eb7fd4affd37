import csv
import io
import json

import pytest

from reflect96 import matgroup, reference
from reflect96.cli import main
from reflect96.exact import ONE, parse_cyc8
from reflect96.matgroup import MAX_CLOSURE_ENV


def run(capsysbinary, *argv):
    code = main(list(argv))
    out, err = capsysbinary.readouterr()
    return code, out, err


@pytest.fixture()
def e8_file(tmp_path):
    f = tmp_path / "e8.txt"
    f.write_text("10000111\n01001011\n00101101\n00011110\n")
    return str(f)


def test_group(capsysbinary):
    code, out, _ = run(capsysbinary, "group")
    assert code == 0
    j = json.loads(out)
    assert j["order"] == 96 and j["class_count"] == 16
    assert j["order_row"] == [1, 8, 4, 8, 2, 4, 4, 6, 4, 12, 4, 3, 4, 12, 2, 4]


def test_chartab_csv(capsysbinary):
    code, out, _ = run(capsysbinary, "chartab", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out.decode())))
    data = [r for r in rows if r[0].startswith("chi") and r[0] != "chi"]
    assert len(data) == 16
    for lab, row in enumerate(data, start=1):
        assert tuple(parse_cyc8(c) for c in row[1:]) == reference.CHARACTER_TABLE[lab - 1]


def test_chartab_mismatch_exit_1(capsysbinary, monkeypatch):
    broken = list(reference.CHARACTER_TABLE)
    broken[0] = (ONE * 2,) + broken[0][1:]
    monkeypatch.setattr(reference, "CHARACTER_TABLE", tuple(broken))
    code, out, err = run(capsysbinary, "chartab")
    assert code == 1
    report = json.loads(err)
    assert report["differences"][0]["chi"] == 1
    assert out == b""


def test_decompose(capsysbinary):
    code, out, _ = run(capsysbinary, "decompose", "--i", "10", "--j", "7")
    assert code == 0
    assert json.loads(out)["nonzero"] == {"chi2": 1, "chi11": 1}


def test_bratteli_json(capsysbinary):
    code, out, _ = run(capsysbinary, "bratteli", "--levels", "9", "--format", "json")
    assert code == 0
    assert json.loads(out)["levels"][8]["square_sum"] == 11051


def test_bratteli_dot(capsysbinary):
    code, out, _ = run(capsysbinary, "bratteli", "--levels", "2", "--format", "dot")
    assert code == 0
    assert out.startswith(b"digraph bratteli {")
    assert out.count(b"->") == 2


def test_dims_check(capsysbinary):
    code, out, _ = run(capsysbinary, "dims", "--max-k", "20", "--check")
    assert code == 0
    assert json.loads(out)["all_agree"]


def test_molien(capsysbinary):
    code, out, _ = run(capsysbinary, "molien", "--rep", "10", "--order", "16")
    assert code == 0
    j = json.loads(out)
    assert j["coefficients"][8] == 1 and j["coefficients"][12] == 1
    code, out, _ = run(capsysbinary, "molien", "--rep", "15", "--order", "8")
    assert code == 0 and "claim" not in json.loads(out)


def test_codes_and_theta(capsysbinary, e8_file):
    code, out, _ = run(capsysbinary, "codes", "--file", e8_file)
    assert code == 0
    j = json.loads(out)
    assert j["enumerator_text"] == "x^8 + 14*x^4*y^4 + y^8"
    assert j["h1_invariant"]
    code, out, _ = run(capsysbinary, "theta", "--file", e8_file, "--order", "3")
    assert code == 0
    assert json.loads(out)["coefficients"] == {"0": "1", "1": "240", "2": "2160", "3": "6720"}


def test_irreps(capsysbinary):
    code, out, _ = run(capsysbinary, "irreps")
    assert code == 0
    assert len(json.loads(out)) == 16


def test_output_file(capsysbinary, tmp_path):
    dest = tmp_path / "tab.csv"
    code, out, _ = run(capsysbinary, "chartab", "-o", str(dest))
    assert code == 0 and out == b""
    assert dest.read_bytes().startswith(b"chi,C1,")


@pytest.mark.parametrize("argv", [
    [],
    ["nope"],
    ["bratteli", "--levels", "0"],
    ["bratteli", "--format", "svg"],
    ["molien", "--rep", "17"],
    ["decompose", "--i", "1"],
    ["chartab", "--format", "dot"],
])
def test_usage_errors(capsysbinary, argv):
    code, _, err = run(capsysbinary, *argv)
    assert code == 2
    assert b"usage" in err


def test_missing_file_is_usage_error(capsysbinary, tmp_path):
    code, _, err = run(capsysbinary, "codes", "--file", str(tmp_path / "none.txt"))
    assert code == 2


def test_closure_env(capsysbinary, monkeypatch):
    monkeypatch.setattr(matgroup, "_H1_CACHE", None)
    monkeypatch.setenv(MAX_CLOSURE_ENV, "10")
    code, _, err = run(capsysbinary, "group")
    assert code == 1
    assert "closure" in json.loads(err)["summary"]


def test_help_exits_zero(capsysbinary):
    code, out, _ = run(capsysbinary, "--help")
    assert code == 0
    assert b"verify-all" in out


def test_verify_all_report(capsysbinary):
    code, out, _ = run(capsysbinary, "verify-all")
    assert code == 0
    report = json.loads(out)
    assert report["passed"]
    assert [c["id"] for c in report["criteria"]] == list(range(1, 11))
    assert any("rho_13(D)" in n for n in report["notes"])
    failed = [f["claim"] for f in report["findings"] if not f["passed"]]
    assert any("rho15" in c for c in failed)
