import json
import subprocess
import sys

import pytest
from conftest import PRESENTATIONS

from ncvaluation.cli import main

P = {name: str(PRESENTATIONS / f"{name}.pres") for name in ("commutative3", "weyl", "quantum3", "jordan", "quantum2")}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_check_gb(capsys):
    code, out, _ = run(capsys, "check-gb", P["commutative3"])
    assert code == 0 and out == "GROEBNER: yes (1 overlap, all reduce to 0)\n"
    code, out, _ = run(capsys, "check-gb", P["jordan"])
    assert code == 0
    assert out.splitlines()[0] == "GROEBNER: no (1 of 1 overlap do not reduce to 0)"
    assert "remainder -2*Y*X*Y + Y*X*X - X*X*Y" in out
    code, data = run_json(capsys, "check-gb", P["jordan"])
    assert data["groebner"] is False and data["failures"][0]["superposition"] == "Y*Y*Y"


def test_complete(capsys):
    code, data = run_json(capsys, "complete", P["jordan"], "--max-deg", "4")
    assert code == 0 and data["complete"] is False
    assert data["basis"] == [
        "Y*Y - Y*X + X*Y",
        "Y*X*Y - 1/2*Y*X*X + 1/2*X*X*Y",
        "Y*X*X*Y - 1/3*Y*X*X*X + 1/3*X*X*X*Y",
    ]
    code, out, _ = run(capsys, "complete", P["weyl"], "--max-deg", "3")
    assert code == 0 and out.startswith("BASIS (1 elements, complete):")
    code, _, err = run(capsys, "complete", P["jordan"], "--max-deg", "1")
    assert code == 1 and "below" in err


def test_normalform_and_member(capsys):
    code, data = run_json(capsys, "normalform", P["weyl"], "--expr", "Y*Y*X")
    assert code == 0 and data["normal_form"] == "X*Y*Y + 2*Y" and data["groebner"] is True
    code, out, _ = run(capsys, "member", P["weyl"], "--expr", "Y*X - X*Y - 1")
    assert code == 0 and out == "MEMBER: yes\n"
    code, out, _ = run(capsys, "member", P["weyl"], "--expr", "Y*X")
    assert out.startswith("MEMBER: no") and "remainder X*Y + 1" in out
    code, out, err = run(capsys, "member", P["jordan"], "--expr", "Y*Y")
    assert code == 0 and "false negative" in err


def test_normal_words(capsys):
    code, out, _ = run(capsys, "normal-words", P["commutative3"], "--max-deg", "5", "--counts-only")
    assert code == 0 and out == "1 3 6 10 15 21\n"
    code, data = run_json(capsys, "normal-words", P["weyl"], "--max-deg", "2")
    assert data["counts"] == [1, 2, 3] and data["words"][2] == ["X*X", "X*Y", "Y*Y"]


def test_valuation(capsys):
    code, out, _ = run(capsys, "valuation", P["weyl"], "--prime", "3", "--expr", "9*Y*X + 1/3*X")
    assert code == 0 and out.splitlines()[0] == "v = -1"
    code, data = run_json(capsys, "valuation", P["weyl"], "--prime", "3", "--expr", "0")
    assert data["valuation"] == "inf" and data["degree"] == "-inf" and data["witness"] is None
    code, _, err = run(capsys, "valuation", P["jordan"], "--prime", "3", "--expr", "X")
    assert code == 1 and "not a Groebner basis" in err


def test_axioms(capsys):
    code, data = run_json(capsys, "axioms", P["quantum3"], "--prime", "3", "--samples", "60")
    assert code == 0 and data["passed"] is False and data["v2_violations"] > 0
    code, out, _ = run(capsys, "axioms", P["weyl"], "--prime", "3", "--samples", "60")
    assert out.startswith("AXIOMS: hold on 60 pairs (seed 0)")


def test_good_reduction(capsys):
    code, data = run_json(capsys, "good-reduction", P["commutative3"], "--prime", "2", "--samples", "40")
    assert code == 0 and data["passed"] is True and sum(data["constructions"].values()) == 40


def test_residue(capsys):
    code, out, _ = run(capsys, "residue", P["quantum3"], "--prime", "3", "--zero-divisor-scan", "2")
    assert code == 0
    assert out.splitlines() == ["RESIDUE over F_3: Groebner yes", "  Y*X", "zero divisor pair: (Y) * (X) = 0"]
    code, data = run_json(capsys, "residue", P["weyl"], "--prime", "2", "--zero-divisor-scan", "2")
    assert data["zero_divisor_scan"]["message"] == "no zero divisors found up to degree 2"


def test_base_change(capsys):
    code, data = run_json(capsys, "base-change", P["jordan"], "--prime", "2")
    assert code == 0 and data["agree"] is True and data["groebner_over_Q"] is False


def test_error_exit_codes(capsys, tmp_path):
    code, _, err = run(capsys, "check-gb", str(tmp_path / "missing.pres"))
    assert code == 2 and "error" in err
    bad = tmp_path / "bad.pres"
    bad.write_text("generators: X, Y\nrelations:\n  Y*X - Q\n")
    code, _, err = run(capsys, "check-gb", str(bad))
    assert code == 2 and "line 3" in err
    code, _, err = run(capsys, "normalform", P["weyl"], "--expr", "Y*")
    assert code == 2 and "--expr" in err
    nonint = tmp_path / "nonint.pres"
    nonint.write_text("generators: X, Y\nrelations:\n  Y*X - 1/3*X*Y\n")
    code, _, err = run(capsys, "valuation", str(nonint), "--prime", "3", "--expr", "X")
    assert code == 1 and "⊄" in err
    code, _, err = run(capsys, "base-change", str(nonint), "--prime", "3")
    assert code == 1
    zfile = tmp_path / "z.pres"
    zfile.write_text("generators: X, Y\ncoefficients: Z\nrelations:\n  2*Y*X - X\n")
    code, _, err = run(capsys, "check-gb", str(zfile))
    assert code == 2 and "not invertible" in err
    with pytest.raises(SystemExit) as info:
        main(["valuation", P["weyl"], "--expr", "X"])
    assert info.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["check-gb", P["jordan"]],
        ["axioms", P["quantum3"], "--prime", "3", "--samples", "40", "--seed", "5"],
        ["good-reduction", P["weyl"], "--prime", "3", "--samples", "20"],
        ["residue", P["quantum3"], "--prime", "3", "--zero-divisor-scan", "2"],
    ],
)
def test_json_is_deterministic(capsys, argv):
    _, out1, _ = run(capsys, *argv, "--json")
    _, out2, _ = run(capsys, *argv, "--json")
    assert out1 == out2
    assert json.dumps(json.loads(out1), indent=2, sort_keys=True, ensure_ascii=False) + "\n" == out1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ncvaluation", "check-gb", P["commutative3"]], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.startswith("GROEBNER: yes")
