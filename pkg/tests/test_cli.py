import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from hyperint.cli import ParseError, parse_parameters, run
from hyperint.exact import QuadraticNumber as Q
from hyperint.quadratic_criterion import decompose, delta_extended
from hyperint.rational_criterion import RationalSystem, christol_delta


def test_parse_values():
    assert parse_parameters("1/2, 1") == [Q(F(1, 2)), Q(1)]
    assert parse_parameters("1/2+1*sqrt(2), -1*sqrt(2)") == [Q(F(1, 2), 1, 2), Q(0, -1, 2)]
    assert parse_parameters("-3/4 - 5/6*sqrt(-6), sqrt(-6), 2") == [Q(F(-3, 4), F(-5, 6), -6), Q(0, 1, -6), Q(2, 0, -6)]
    assert parse_parameters("1/2-sqrt(5)") == [Q(F(1, 2), -1, 5)]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("-2", "nonpositive"),
        ("1/2, 0", "position 5"),
        ("1/2+", "position 4"),
        ("1/0", "zero denominator"),
        ("1*sqrt(2), 1*sqrt(3)", "mixed"),
        ("1*sqrt(1)", "square-free"),
        ("1*sqrt(12)", "square-free"),
        ("1/2 x", "position 4"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment.replace("(", r"\(")):
        parse_parameters(text)


def record(argv):
    code, out = run(argv + ["--json"])
    return code, json.loads(out)


def test_decide_commands():
    code, rec = record(["decide", "--alpha", "1/2", "--beta", "1"])
    assert code == 0 and rec["verdict"] == "n-integral"
    assert list(rec) == ["version", "command", "inputs", "verdict", "route", "witness", "metadata"]
    assert rec["version"] == "hyperint/1"
    code, rec = record(["decide", "--alpha", "1*sqrt(2)", "--beta", "2*sqrt(2)"])
    assert code == 1
    w = rec["witness"]
    assert (w["statement"], w["a"], w["eps"], w["x"], w["value"]) == ("IV", 1, "3/4", "3/2", -1)
    assert rec["metadata"]["P0"] == 132
    code, rec = record(["decide", "--alpha", "1", "--beta", "1/2"])
    assert code == 1 and rec["witness"]["x"] == "1/2"


def test_padic_and_usage_errors():
    assert run(["padic", "--p", "4"])[0] == 2
    assert run(["padic", "--alpha", "1/2", "--beta", "1", "--p", "4"])[0] == 2
    assert run(["padic", "--alpha", "1/2", "--beta", "1", "--p", "2"])[0] == 2
    code, rec = record(["padic", "--alpha", "1/2", "--beta", "1", "--p", "7"])
    assert code == 0 and (rec["verdict"], rec["route"]) == ("inconclusive", "valuation-scan")
    assert rec["inputs"]["nmax"] == 49
    code, rec = record(["padic", "--alpha", "1", "--beta", "1/2", "--p", "3"])
    assert code == 1 and rec["witness"]["n"] == 2
    assert run(["padic", "--alpha", "1*sqrt(2)", "--beta", "1", "--p", "101"])[0] == 2
    code, rec = record(["padic", "--alpha", "1/2", "--beta", "1", "--p", "11"])
    assert code == 0 and rec["verdict"] == "in-Zp"
    code, rec = record(["padic", "--alpha", "1/2", "--beta", "1/3,1", "--p", "37"])
    assert code == 1 and rec["route"] == "prime-r<s"
    assert run(["decide", "--alpha", "0", "--beta", "1"])[0] == 2
    assert run(["nonsense"])[0] == 2
    assert run(["--threads", "0", "decide", "--alpha", "1", "--beta", "1"])[0] == 2


def test_oracle_equidist_breakpoints():
    code, rec = record(["oracle", "--alpha", "1", "--beta", "1/2", "--pmax", "50", "--nmax", "100"])
    assert code == 1 and rec["witness"]["p"] == 3 and rec["witness"]["value"] == "-1/1"
    code, rec = record(["oracle", "--alpha", "1/2", "--beta", "1", "--pmax", "50", "--nmax", "100"])
    assert code == 0 and rec["verdict"] == "inconclusive"
    code, rec = record(["equidist", "--poly", "1,0,-2", "--mod", "8", "--res", "1,7", "--xmax", "1000"])
    assert code == 0 and rec["metadata"]["samples"] == 160 and rec["metadata"]["heuristic"] is True
    code, rec = record(["breakpoints", "--alpha", "1*sqrt(2)", "--beta", "2*sqrt(2)"])
    assert code == 0 and rec["metadata"]["points"] == ["1/2"] and rec["metadata"]["samples"] == ["1/4", "3/4"]
    assert run(["breakpoints", "--alpha", "1/2", "--beta", "1"])[0] == 2
    assert run(["breakpoints", "--alpha", "1/2", "--beta", "1", "--D", "2"])[0] == 0


def test_witness_round_trip():
    code, rec = record(["decide", "--alpha", "1*sqrt(2)", "--beta", "2*sqrt(2)"])
    w = rec["witness"]
    sys_ = decompose([Q(0, 1, 2)], [Q(0, 2, 2)])
    assert delta_extended(F(w["x"]), w["a"], F(w["eps"]), sys_) == w["value"]
    code, rec = record(["decide", "--alpha", "1", "--beta", "1/2"])
    w = rec["witness"]
    assert christol_delta(F(w["x"]), w["a"], RationalSystem((F(1),), (F(1, 2),))) == w["value"]


def test_global_flags_in_either_position():
    a = run(["--json", "decide", "--alpha", "1/2", "--beta", "1"])
    b = run(["decide", "--alpha", "1/2", "--beta", "1", "--json"])
    assert a == b


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "hyperint", "decide", "--alpha", "1/2", "--beta", "1"], capture_output=True, text=True
    )
    assert out.returncode == 0 and "verdict: n-integral" in out.stdout
