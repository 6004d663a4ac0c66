import json

import pytest

from golden import SIGMA_C_MINUS_LEADING
from kerovpoly.cli import main
from kerovpoly.render import poly_from_json, poly_latex, rational_str, parse_rational
from kerovpoly.engine import sigma


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


def test_sigma_text(capsys):
    code, out, _ = run(capsys, "sigma", "--k", "3", "--basis", "R", "--format", "text")
    assert code == 0
    assert out.splitlines()[-1] == "Sigma_3 = R_4 + R_2"


def test_sigma_single_grade(capsys):
    assert run(capsys, "sigma", "--k", "5", "--grade", "4", "--basis", "C", "--format", "latex")[1] == "8\\,C_{2}\n"
    assert run(capsys, "sigma", "--k", "2", "--grade", "2")[1] == "0\n"
    assert run(capsys, "sigma", "--k", "5", "--grade", "2", "--basis", "R")[1] == "15*R_4 + 5*R_2^2\n"


def test_sigma_all_pieces(capsys):
    _, out, _ = run(capsys, "sigma", "--k", "5")
    assert out.splitlines() == [
        "Sigma_{5,0} = R_6",
        "Sigma_{5,2} = 15*R_4 + 5*R_2^2",
        "Sigma_{5,4} = 8*R_2",
        "Sigma_{5,6} = 0",
        "Sigma_5 = R_6 + 15*R_4 + 5*R_2^2 + 8*R_2",
    ]


def test_sigma_c_basis_total_drops_leading(capsys):
    _, out, _ = run(capsys, "sigma", "--k", "7", "--basis", "C")
    assert out.splitlines()[-1] == "Sigma_7 - R_8 = 14*C_6 + 469/3*C_4 + 203/3*C_2^2 + 180*C_2"


def test_sigma_json_round_trip(capsys):
    _, out, _ = run(capsys, "sigma", "--k", "9", "--basis", "C", "--format", "json")
    doc = json.loads(out)
    assert doc["k"] == 9 and doc["basis"] == "C"
    assert doc["total_includes_leading"] is False
    assert poly_from_json(doc["total"]) == SIGMA_C_MINUS_LEADING[9]
    for g, piece in doc["pieces"].items():
        assert poly_from_json(piece) == sigma(9, "C").piece(int(g))


def test_json_coefficients_are_fraction_strings(capsys):
    _, out, _ = run(capsys, "sigma", "--k", "5", "--grade", "2", "--basis", "R", "--format", "json")
    doc = json.loads(out)
    assert doc["grade"] == 2
    assert doc["terms"] == [
        {"monomial": [[2, 2]], "coeff": "5/1"},
        {"monomial": [[4, 1]], "coeff": "15/1"},
    ]


def test_rational_strings():
    assert rational_str(3) == "3/1"
    assert parse_rational("-469/3") * 3 == -469
    assert type(parse_rational("4/2")) is int


def test_table_latex_matches_golden(capsys):
    _, out, _ = run(capsys, "table", "--k-min", "3", "--k-max", "10", "--format", "latex")
    lines = out.splitlines()
    assert lines[0] == r"\begin{eqnarray*}" and lines[-1] == r"\end{eqnarray*}"
    for k, line in zip(range(3, 11), lines[1:-1]):
        assert line == rf"\Sigma_{{{k}}}-R_{{{k + 1}}} &=& {poly_latex(SIGMA_C_MINUS_LEADING[k])}\\"
    assert r"\tfrac{469}{3}\,C_{4}" in out
    assert r"\tfrac{165}{4}\,C_{9}" in out


def test_table_json(capsys):
    _, out, _ = run(capsys, "table", "--k-max", "4", "--basis", "R", "--format", "json")
    assert [d["k"] for d in json.loads(out)] == [1, 2, 3, 4]


def test_output_is_byte_identical(capsys):
    first = run(capsys, "table", "--k-max", "8", "--format", "json")[1]
    second = run(capsys, "table", "--k-max", "8", "--format", "json")[1]
    assert first == second


def test_cumulants(capsys):
    _, out, _ = run(capsys, "cumulants", "1", "--max", "4")
    assert out.splitlines() == ["R_1 = 0", "R_2 = 1", "R_3 = 0", "R_4 = -1"]
    _, out, _ = run(capsys, "cumulants", "2,1", "--max", "4", "--format", "json")
    assert [c["value"] for c in json.loads(out)["cumulants"]] == ["0/1", "3/1", "0/1", "-6/1"]


def test_cumulants_default_range(capsys):
    _, out, _ = run(capsys, "cumulants", "4,3,3,3,1")
    assert len(out.splitlines()) == 15
    assert out.splitlines()[1] == "R_2 = 14"


def test_character(capsys):
    assert run(capsys, "character", "2,1", "--class", "3")[1] == "-1\n"
    assert run(capsys, "character", "2,1", "--k", "3", "--kind", "normalized")[1] == "-3\n"
    assert run(capsys, "character", "2,1", "--k", "3", "--kind", "central")[1] == "-1\n"
    _, out, _ = run(capsys, "character", "3,1", "--class", "2,1,1", "--format", "json")
    assert json.loads(out) == {"partition": [3, 1], "class": [2, 1, 1], "kind": "irreducible", "value": "1/1"}


def test_verify_pass(capsys):
    code, out, err = run(capsys, "verify", "characters", "--max-n", "5")
    assert code == 0
    assert out.startswith("characters (max_n=5): pass")
    assert "characters:" in err  # timing goes to stderr


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "positivity", "--basis", "C", "--max-k", "10", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass" and doc["counterexamples"] == []
    assert "timing" not in doc


def test_verify_failure_exit_code(capsys, monkeypatch):
    from kerovpoly import engine
    from kerovpoly.exact import Poly

    monkeypatch.setattr(engine, "sigma_k2_closed", lambda k: Poly.var("C", 2))
    code, out, _ = run(capsys, "verify", "closed", "--max-k", "4", "--max-k-cycles", "3")
    assert code == 1
    assert ": fail," in out.splitlines()[0]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "nosuch"],
        ["cumulants", ""],
        ["cumulants", "1,2"],
        ["cumulants", "a"],
        ["sigma", "--k", "0"],
        ["sigma", "--k", "3", "--grade", "3"],
        ["sigma", "--k", "3", "--basis", "Q"],
        ["table", "--k-min", "5", "--k-max", "3"],
        ["character", "2,1"],
        ["character", "2,1", "--class", "2"],
        ["character", "2,2", "--class", "2,2", "--kind", "normalized"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert usage_error(capsys, *argv) == 2


def test_module_entry_point():
    import subprocess
    import sys

    ok = subprocess.run([sys.executable, "-m", "kerovpoly", "sigma", "--k", "4"], capture_output=True, text=True)
    assert ok.returncode == 0
    assert ok.stdout.splitlines()[-1] == "Sigma_4 = R_5 + 5*R_3"
    bad = subprocess.run([sys.executable, "-m", "kerovpoly", "verify", "nosuch"], capture_output=True, text=True)
    assert bad.returncode == 2
    assert "invalid choice" in bad.stderr
