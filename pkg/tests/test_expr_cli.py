import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from qchar import laurent, schur
from qchar.cli import main
from qchar.expr import (ParseError, format_weight, from_json_obj, parse_poly, parse_weight,
                        render, to_json_obj)

CORPUS = json.loads((Path(__file__).parent / "data" / "poly_corpus.json").read_text())


def P(text, n=2):
    return parse_poly(text, n)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- parser ---------------------------------------------------------------------

def test_parse_examples():
    assert P("x1^3*x2 + 2*x1^2*x2^2 + x1*x2^3") == schur.schur_p((3, 1))
    assert P("x1^(1/2)*x2^(1/2)") == laurent.monomial((Fraction(1, 2), Fraction(1, 2)))


@pytest.mark.parametrize("text, column", [("x1 +", 5), ("x1 * * x2", 6), ("x1 $ x2", 4),
                                          ("(x1 + x2", 9), ("x1^", 4)])
def test_syntax_errors_report_position(text, column):
    with pytest.raises(ParseError) as info:
        P(text)
    assert info.value.line == 1 and info.value.column == column
    assert f"column {column}" in str(info.value)


def test_error_line_numbers():
    with pytest.raises(ParseError) as info:
        P("x1 +\n  x2 +")
    assert info.value.line == 2 and info.value.column == 7


def test_unknown_variable():
    with pytest.raises(ParseError, match="unknown variable x3"):
        P("x1 + x3")


@pytest.mark.parametrize("text", ["(x1 + x2)^(-1)", "(x1 + x2)^(1/2)", "(2*x1)^(1/2)", "x1^x2"])
def test_malformed_exponents(text):
    with pytest.raises(ParseError):
        P(text)


def test_corpus_shape():
    assert len(CORPUS) == 200
    assert sum("(-" in row["canonical"] for row in CORPUS) >= 50
    assert sum("/2)" in row["canonical"] for row in CORPUS) >= 50


@pytest.mark.parametrize("row", CORPUS, ids=lambda row: row["text"][:40])
def test_corpus_roundtrip(row):
    f = P(row["text"], row["nvars"])
    text = render(f)
    assert text == row["canonical"]
    assert P(text, row["nvars"]) == f
    assert render(P(text, row["nvars"])) == text
    assert from_json_obj(json.loads(render(f, "json"))) == f


def _polys():
    exps = st.integers(-6, 6).map(lambda k: Fraction(k, 2))
    coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=5)
    return st.integers(1, 3).flatmap(lambda n: st.lists(
        st.tuples(st.lists(exps, min_size=n, max_size=n), coeffs), max_size=5)
        .map(lambda ts: laurent.make(ts, n)))


@given(_polys())
def test_render_parse_roundtrip(f):
    assert P(render(f), f.nvars) == f


# -- renderers ------------------------------------------------------------------

def test_json_schema():
    f = P("3/2*x1^3*x2^(-1) - x1^(1/2)*x2^(1/2)")
    obj = to_json_obj(f)
    assert obj == {"nvars": 2, "terms": [
        {"coeff": "3/2", "exps": ["3", "-1"]},
        {"coeff": "-1", "exps": ["1/2", "1/2"]}]}
    assert from_json_obj(obj) == f


def test_latex():
    assert render(P("x1^2 - 3/2*x1*x2^(-1) + 1"), "latex") == \
        r"x_{1}^{2} - \frac{3}{2} x_{1} x_{2}^{-1} + 1"
    assert render(P("-x1^(-3/2)", 1), "latex") == r"-x_{1}^{-\frac{3}{2}}"
    assert render(laurent.zero(2), "latex") == "0"


def test_unknown_format():
    with pytest.raises(ValueError):
        render(P("x1"), "html")


def test_weights():
    assert parse_weight("3,1,0,0") == (3, 1, 0, 0)
    assert parse_weight("2,0,0,-1") == (2, 0, 0, -1)
    assert parse_weight("") == ()
    with pytest.raises(ValueError, match="malformed weight"):
        parse_weight("3,a")
    assert format_weight((2, 0, 0, -1)) == "(2,0,0,-1)"


# -- command line ---------------------------------------------------------------

def test_cli_schur_p(capsys):
    code, out, _ = run(capsys, "schur-p", "-n", "2", "-w", "3,1")
    assert code == 0 and out == "x1^3*x2 + 2*x1^2*x2^2 + x1*x2^3\n"


def test_cli_other_functions(capsys):
    # lex order puts (0,-1) ahead of (-1,0)
    assert run(capsys, "schur-s", "-w", "0,-1")[1] == "x2^(-1) + x1^(-1)\n"
    assert run(capsys, "euler", "-w", "2,1")[1] == "2*x1^2*x2 + 2*x1*x2^2\n"
    assert run(capsys, "typical", "-w", "2,1")[1] == "2*x1^2*x2 + 2*x1*x2^2\n"
    code, out, _ = run(capsys, "typical", "-w", "1/2,-3/2")
    assert code == 0 and "x1^(1/2)" in out


def test_cli_ev_worked_example(capsys):
    code, out, _ = run(capsys, "ev", "-n", "4", "-w-basis", "p:3,1,0,0")
    _, expected, _ = run(capsys, "schur-p", "-n", "2", "-w", "3,1")
    first, second = out.splitlines()
    assert code == 0 and first + "\n" == expected
    assert second == 'P-basis (n=2): {"(3,1)": "1"}'


def test_cli_ev_from_expression(capsys):
    code, out, _ = run(capsys, "ev", "-n", "3", "-f", "x1 + x2 + x3")
    assert code == 0 and out.splitlines()[0] == "x1"


def test_cli_member(capsys):
    code, out, _ = run(capsys, "member", "-n", "2", "--ring", "q", "-f", "x1^2*x2^2")
    assert code == 1 and "t-dependence t^4 on wall (1,2)" in out
    code, out, _ = run(capsys, "member", "-n", "2", "--ring", "half",
                       "-f", "(x1 + x2)*x1^(1/2)*x2^(1/2)")
    assert code == 0 and out.startswith("member")
    code, out, _ = run(capsys, "member", "-n", "2", "--ring", "pq", "-f", "x1 + x2")
    assert code == 1 and "PQ(n)" in out
    code, out, _ = run(capsys, "member", "-n", "2", "--ring", "groupoid", "-f", "p:2,1")
    assert code == 0 and "groupoid" in out


def test_cli_decompose_and_kernel(capsys):
    code, out, _ = run(capsys, "decompose", "-n", "2", "-f", "(x1+x2)^2")
    assert code == 0 and out == '{"(2,0)": "1"}\n'
    code, out, _ = run(capsys, "kernel", "-n", "2", "-f", "p:3,1")
    assert code == 0 and json.loads(out) == {"(2,1)": "1"}


def test_cli_lift(capsys):
    assert run(capsys, "lift", "-n", "4", "-w", "3,1") == (0, "(3,1,0,0)\n", "")
    assert run(capsys, "lift", "-n", "4", "-w", "2,-1")[1] == "(2,0,0,-1)\n"


def test_cli_formats(capsys):
    out = run(capsys, "schur-p", "-w", "1,0", "--format", "json")[1]
    assert json.loads(out)["nvars"] == 2
    assert run(capsys, "schur-p", "-w", "1,0", "--format", "latex")[1] == "x_{1} + x_{2}\n"


def test_cli_reads_files_and_json(capsys, tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("x1^2 + 2*x1*x2 + x2^2\n")
    assert run(capsys, "decompose", "-n", "2", "-f", str(path))[1] == '{"(2,0)": "1"}\n'
    path.write_text(render(schur.schur_p((2, 0, -1)), "json"))
    assert run(capsys, "decompose", "-f", str(path))[1] == '{"(2,0,-1)": "1"}\n'


@pytest.mark.parametrize("argv, message", [
    (["schur-p", "-w", "2,2"], "not in Lambda_2"),
    (["member", "-f", "x1 +"], "-n is required"),
    (["member", "-n", "2", "-f", "x1 +"], "column 5"),
    (["typical", "-w", "1,0,-1"], "atypical"),
    (["ev", "-n", "2", "-f", "x1^2*x2^2"], "t-dependence"),
    (["kernel", "-n", "3", "-f", "x1 + x2 + x3"], "ev(f) is not zero"),
    (["lift", "-n", "4", "-w", "3"], "n-2 = 2 parts"),
    (["schur-p", "-n", "3", "-w", "3,1"], "does not match"),
])
def test_cli_errors_exit_2(capsys, argv, message):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert err.startswith("qchar: error:") and message in err


def test_cli_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "-n", "3", "--max-entry", "2", "--suite", "kernel")
    assert code == 0
    assert out.splitlines()[-1] == "0 failure(s)"
    assert all(line.startswith("[PASS] kernel") for line in out.splitlines()[:-1])


def test_cli_is_byte_deterministic():
    cmds = [["schur-p", "-w", "3,1,0,0"], ["decompose", "-n", "3", "-f", "p:2,0,-1"],
            ["typical", "-w", "5/2,1/2,-3/2", "--format", "json"]]
    for argv in cmds:
        outs = {subprocess.run([sys.executable, "-m", "qchar.cli", *argv],
                               capture_output=True, check=True).stdout for _ in range(2)}
        assert len(outs) == 1
