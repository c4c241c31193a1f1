import json

import pytest

from ordkit.cli import EXIT_DOMAIN, EXIT_OK, EXIT_SELFTEST, EXIT_SYNTAX, main
from ordkit.syntax import from_data


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_norm(capsys):
    assert run(capsys, "norm", "1+w") == (EXIT_OK, "w\n", "")


def test_cmp(capsys):
    code, out, _ = run(capsys, "cmp", "w^2", "w*5+3")
    assert (code, out) == (EXIT_OK, "GT\n")


@pytest.mark.parametrize(
    "op, a, b, want",
    [
        ("add", "3", "w", "w"),
        ("mul", "w+1", "w", "w^2"),
        ("pow", "2", "w", "w"),
        ("sub", "w", "w+5", "5"),
    ],
)
def test_binary_ops(capsys, op, a, b, want):
    assert run(capsys, op, a, b)[:2] == (EXIT_OK, want + "\n")


def test_div_leading_classify(capsys):
    assert run(capsys, "div", "w*3+5", "w")[1] == "(3, 5)\n"
    assert run(capsys, "leading", "w^w*3+w^2")[1] == "(w, 3, w^2)\n"
    assert run(capsys, "classify", "w^2*3")[1] == "Limit infinite\n"


def test_pair_unpair(capsys):
    code, out, _ = run(capsys, "pair", "w", "1", "2")
    assert code == EXIT_OK
    z = out.strip()
    assert run(capsys, "unpair", "w", z)[1] == "(1, 2)\n"


def test_pair_json(capsys):
    code, out, _ = run(capsys, "--json", "unpair", "w*2+3", "w+96")
    assert code == EXIT_OK
    x, y = (from_data(p) for p in json.loads(out))
    assert (str(x), str(y)) == ("5", "w + 1")


def test_trace_goes_to_stderr(capsys):
    code, out, err = run(capsys, "pair", "--trace", "w*2+3", "5", "w+1")
    assert code == EXIT_OK and out == "w + 96\n"
    lines = err.splitlines()
    assert lines[0] == "cast[w*2 + 3]\t5\t5"
    assert all(len(line.split("\t")) == 3 for line in lines)


def test_cnfhead(capsys):
    assert run(capsys, "cnfhead", "w*2+3", "w*2+1")[1] == "2\n"
    assert run(capsys, "cnfhead", "w*2+3", "2", "--inverse")[1] == "w*2 + 1\n"


def test_cnfmap(capsys):
    assert run(capsys, "cnfmap", "eval", "2", "w", "3", "1", "1", "1")[1] == "10\n"
    assert run(capsys, "cnfmap", "inv", "w", "w", "w^2*3+5")[1] == "2: 3\n0: 5\n"
    code, _, err = run(capsys, "cnfmap", "eval", "2", "w", "3")
    assert code == EXIT_DOMAIN


def test_seq(capsys):
    code, out, _ = run(capsys, "seq", "encode", "w^2", "3", "w")
    assert code == EXIT_OK
    z = out.strip()
    assert run(capsys, "seq", "decode", "w^2", z)[1] == "(3, w)\n"
    assert run(capsys, "seq", "decode", "w", "2")[1] == "NotInImage\n"
    assert run(capsys, "--json", "seq", "decode", "w", "2")[1] == "null\n"
    assert run(capsys, "seq", "decode", "w", "0")[1] == "()\n"


def test_json_flag_after_subcommand(capsys):
    assert run(capsys, "norm", "w*2+3", "--json")[1] == '[[[[[],"1"]],"2"],[[],"3"]]\n'


# one test per exit-code class
def test_exit_success(capsys):
    assert run(capsys, "norm", "0")[0] == EXIT_OK


def test_exit_domain_error(capsys):
    code, out, err = run(capsys, "sub", "w", "3")
    assert code == EXIT_DOMAIN and out == "" and "Underflow" in err


def test_exit_syntax_error(capsys):
    code, _, err = run(capsys, "pair", "w", "junk", "1")
    assert code == EXIT_SYNTAX and "byte 0" in err


def test_exit_usage_error(capsys):
    assert run(capsys, "pair", "w", "junk")[0] == EXIT_SYNTAX
    assert run(capsys, "frobnicate")[0] == EXIT_SYNTAX


def test_exit_selftest_failure(capsys):
    code, out, _ = run(capsys, "selftest", "--samples", "5", "--mutant", "broken-add")
    assert code == EXIT_SELFTEST
    assert "FAIL differential.add" in out


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest", "--samples", "5", "--seed", "3")
    assert code == EXIT_OK
    assert "FAIL" not in out


def test_selftest_json(capsys):
    code, out, _ = run(capsys, "--json", "selftest", "--samples", "2")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["passed"] is True
    assert {p["name"] for p in doc["properties"]} >= {"differential.add", "bij.pairing_exhaustive[w; 50x50]"}
