import io
import json
import subprocess
import sys

import pytest

from ratseries.cli import EXIT_OK, EXIT_SEMANTIC, EXIT_SYNTAX, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_basic(capsys):
    assert run(capsys, "1/(1-2*z) # 1/(1-3*z)") == (EXIT_OK, "1/(1-6*z)\n", "")


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO('no("aA")\n'))
    assert run(capsys)[:2] == (EXIT_OK, "A^1 a^1 + 1\n")


def test_laurent_mode(capsys):
    assert run(capsys, "--mode", "laurent", "z^-1 # 1/(1-5*z)")[:2] == (EXIT_OK, "0\n")


def test_exit_codes(capsys):
    code, out, err = run(capsys, "1/(1-2*z")
    assert code == EXIT_SYNTAX and out == "" and "syntax error" in err
    code, out, err = run(capsys, "1/(1-0*z)")
    assert code == EXIT_SEMANTIC and out == "" and "zero pole" in err
    code, _, err = run(capsys, "z^-1")
    assert code == EXIT_SEMANTIC and "power mode" in err
    code, _, _ = run(capsys, "--truncate", "0", "expand(z)")
    assert code == EXIT_SEMANTIC


def test_expand_output(capsys):
    code, out, _ = run(capsys, "expand(1/(1-2*z)^2, 4)")
    assert out == "0\t1\n1\t4\n2\t12\n3\t32\n"
    code, out, _ = run(capsys, "--mode", "laurent", "expand(z^-2 + 1/(1-z), 4)")
    assert out == "-2\t1\n-1\t0\n0\t1\n1\t1\n"
    code, out, _ = run(capsys, "--truncate", "3", "expand(1/(1-z))")
    assert out == "0\t1\n1\t1\n2\t1\n"


def test_formats(capsys):
    assert run(capsys, "--format", "latex", "1/(1-6*z)")[1] == "\\frac{1}{(1-6z)^{1}}\n"
    out = run(capsys, "--format", "json", "2/(1-2*z)^3 + z^2")[1]
    assert json.loads(out) == {"mode": "power", "monomials": [{"n": 2, "c": "1"}],
                               "poles": [{"alpha": "2", "m": 3, "c": "2"}]}
    code, again, _ = run(capsys, "--format", "json", out)
    assert code == EXIT_OK and again == out
    assert json.loads(run(capsys, "--format", "json", "coeff(z, 1)")[1]) == {"scalar": "1"}


EXPRESSIONS = ["1/(1-2*z)^2", "1/(1-z)^2 # 1/(1-3*z)^3", "(1+i)/(1-i*z)^2 + z^3",
               "d(x(1/(1+z)^2))", "diag(3, 1/(1-1/2*z))", "1/(1-z) * 1/(1-2*z) - 5"]


@pytest.mark.parametrize("expr", EXPRESSIONS)
def test_coeff_agrees_with_expand(capsys, expr):
    for n in (0, 1, 5, 17):
        _, c, _ = run(capsys, f"coeff({expr}, {n})")
        _, lines, _ = run(capsys, f"expand({expr}, {n + 1})")
        assert lines.splitlines()[n] == f"{n}\t{c.strip()}"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ratseries", "coeff(1/(1-2*z)^2, 3)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "32\n"
    proc = subprocess.run([sys.executable, "-m", "ratseries", "(("],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout == ""
