import io

from cyop.cli import run
from cyop.exact.series import parse_series
from cyop.operator.theta import parse_operator


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_instantons_row_2_1():
    assert call("instantons", "--catalog", "2.1", "--count", "3") == (0, "12, 163, 3204\n", "")


def test_cycheck_quintic():
    code, out, _ = call("cycheck", "--expr", "T^4 - 3125*x*(T+1/5)*(T+2/5)*(T+3/5)*(T+4/5)")
    assert code == 0 and out == "Q = 0 (Calabi-Yau condition holds)\n"
    code, out, _ = call("cycheck", "--expr", "T^4 - x*T")
    assert code == 0 and out.startswith("Q = (") and "numerator" in out


def test_fingerprint():
    assert call("fingerprint", "12", "3204")[:2] == (0, "2.1\n")
    assert call("catalog", "fingerprint", "160", "539680")[:2] == (0, "2.33, 2.xx41\n")


def test_exit_codes():
    assert call()[0] == 2
    assert call("series")[0] == 2
    assert call("series", "--key", "A", "--expr", "T")[0] == 2
    assert call("series", "--key", "missing")[0] == 1
    assert call("classify", "--expr", "T^4 - x*T^2 - x^2*T^3")[0] == 1


def test_outputs_round_trip():
    _, out, _ = call("series", "--key", "D", "--order", "4")
    s = parse_series(out.strip())
    assert list(s.coeffs) == [1, 60, 13860, 4084080, 1338557220]
    _, out, _ = call("fit", "--catalog", "2.1", "--order", "30")
    op = parse_operator(out.splitlines()[0])
    _, again, _ = call("fit", "--expr", out.splitlines()[0], "--order", "30")
    assert parse_operator(again.splitlines()[0]) == op


def test_verify_deterministic():
    a = call("catalog", "verify", "--all", "--no-timing", "--order", "8")
    b = call("catalog", "verify", "--all", "--no-timing", "--order", "8", "--jobs", "2")
    assert a[0] == 0 and a == b
    assert "67 exact, 2 flagged, 0 mismatch" in a[1]


def test_misc_commands():
    assert call("riemann", "--catalog", "2.1")[1].splitlines()[-1] == "inf: 1/2, 1/2, 3/2, 3/2"
    assert call("classify", "--catalog", "2.67")[1].startswith("labels: Transverse")
    assert call("classify", "--params=-112,-224,-172,-60,-8,-2048,1/2,1/2,3/2,3/2")[1].startswith("labels: Main")
    assert call("hadamard", "A", "b", "--order", "2")[1] == "1 + 12*x + 684*x^2 + O(x^3)\n"
    assert call("moebius", "--key", "A", "--N", "16", "--order", "2")[1] == "1 + 12*x + 164*x^2 + O(x^3)\n"
    code, out, _ = call("build", "D", "--order", "3")
    assert code == 0 and "4084080*x^3" in out
    assert "q = x + 770*x^2" in call("qseries", "--expr", "T^4 - 5*x*(5T+1)(5T+2)(5T+3)(5T+4)", "--order", "3")[1]
    assert call("yukawa", "--key", "strange", "--order", "3")[0] == 0
    assert call("frobenius", "--key", "A", "--order", "3")[1].count("\n") == 2
    code, _, err = call("series", "--key", "A", "--order", "65")
    assert code == 0 and "warning" in err
    assert "2.49" in call("catalog", "get", "2.49")[1]
    assert len(call("catalog", "list")[1].splitlines()) == 76
