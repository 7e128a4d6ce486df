import csv
import io
import pathlib
from fractions import Fraction as F

import pytest

from rnspace.cli import main
from rnspace.core import RnParams, parse_literal

DATA = pathlib.Path(__file__).parent / "data"
REGION_LIST = [F(1, 8), F(2, 8), F(3, 8), F(1, 2), F(1), F(3, 2), F(2), F(4), F(6)]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


# --- enum ----------------------------------------------------------------

def test_enum_region_list():
    code, out, _ = run("enum", "--n", "1", "--e-min", "-1", "--e-max", "1")
    assert code == 0
    table = rows(out)
    assert list(table[0]) == ["literal", "value", "exponent"]
    assert [F(r["value"]) for r in table] == REGION_LIST


def test_enum_signed_has_zero():
    code, out, _ = run("enum", "--n", "1", "--e-min", "0", "--e-max", "0", "--signed")
    table = rows(out)
    assert code == 0 and len(table) == 7
    assert table[3]["literal"] == "(0.0,0)"


def test_enum_table_format():
    code, out, _ = run("enum", "--format", "table", "--e-min", "0", "--e-max", "0")
    assert code == 0
    assert out.splitlines()[0].split() == ["literal", "value", "exponent"]
    assert out.splitlines()[1].split() == ["(0.1,0)", "1/2", "0"]


@pytest.mark.parametrize("argv", [
    ("enum", "--e-min", "2", "--e-max", "1"),
    ("enum", "--n", "0"),
    ("enum", "--n", "12", "--e-min", "-100", "--e-max", "100"),
])
def test_enum_usage_errors(argv):
    code, _, err = run(*argv)
    assert code == 2 and err


# --- arith ---------------------------------------------------------------

def test_arith_add_trace():
    code, out, _ = run("arith", "add", "(1.0,1)", "(1.0,0)", "--n", "1")
    assert code == 0
    assert out.splitlines() == ["result: (1.0,1)", "exact: 5/1", "path: absorption"]


def test_arith_mul_trace():
    code, out, _ = run("arith", "mul", "(1.1,2)", "(0.1,0)", "--n", "1")
    assert out.splitlines() == ["result: (1.0,2)", "exact: 12/1", "path: tie away from zero"]


def test_arith_sub_and_overflow():
    _, out, _ = run("arith", "sub", "(1.0,0)", "(0.1,0)")
    assert out.splitlines()[0] == "result: (0.1,0)"
    _, out, _ = run("arith", "add", "(1.1,0)", "(1.1,0)")
    assert out.splitlines()[2] == "path: overflow-jump"


def test_arith_complex():
    code, out, _ = run("arith", "cmul", "((0.0,0),(0.1,0))", "((0.0,0),(0.1,0))")
    assert code == 0
    assert out.splitlines()[:2] == ["result: ((-1.0,-1),(0.0,0))", "exact: (-1/4,0/1)"]
    _, out, _ = run("arith", "cadd", "((1.0,1),(0.0,0))", "((1.0,0),(0.0,0))")
    assert out.splitlines()[0] == "result: ((1.0,1),(0.0,0))"


def test_arith_div_is_undefined():
    code, _, err = run("arith", "div", "(1.0,0)", "(1.0,0)")
    assert code == 2
    assert "operation not defined in R_n" in err


@pytest.mark.parametrize("argv", [
    ("arith", "add", "(1.0,0", "(1.0,0)"),
    ("arith", "add", "(0.0,3)", "(1.0,0)"),
    ("arith", "pow", "(1.0,0)", "(1.0,0)"),
    ("arith", "add", "(1.0,0)", "(1.0,0)", "--n", "2"),
])
def test_arith_errors(argv):
    code, _, err = run(*argv)
    assert code == 2 and err


# --- figures -------------------------------------------------------------

def test_fig1_ticks():
    _, out, _ = run("fig", "fig1", "--n", "1", "--e-min", "-1", "--e-max", "1")
    vals = [F(r["value"]) for r in rows(out)]
    assert vals == [-v for v in reversed(REGION_LIST)] + [0] + REGION_LIST


def test_fig1_positive_ticks_two_regions():
    _, out, _ = run("fig", "fig1", "--e-min", "0", "--e-max", "1")
    vals = [F(r["value"]) for r in rows(out) if F(r["value"]) > 0]
    assert vals == [F(1, 2), 1, F(3, 2), 2, 4, 6]


def test_fig2_classes():
    _, out, _ = run("fig", "fig2", "--n", "1", "--e-min", "-1", "--e-max", "1")
    table = rows(out)
    assert list(table[0]) == ["x_literal", "y_literal", "x_value", "y_value", "singularity_class"]
    for r in table:
        zeros = (F(r["x_value"]) == 0) + (F(r["y_value"]) == 0)
        assert int(r["singularity_class"]) == zeros
    assert sum(r["singularity_class"] == "2" for r in table) == 1


@pytest.mark.parametrize("j", [1, -1])
def test_fig4_relabel(j):
    _, out, _ = run("fig", "fig4", "--n", "1", "--e-min", "-1", "--e-max", "1", "--j", str(j))
    table = rows(out)
    assert {r["series"] for r in table} == {"original", "transformed", "relabel"}
    for r in table:
        if r["series"] != "original":
            assert int(r["new_index"]) == int(r["old_index"]) + 3 * j
    by_index = {r["old_index"]: F(r["value"]) for r in table if r["series"] == "original"}
    for r in table:
        if r["series"] == "transformed":
            assert F(r["value"]) == by_index[r["old_index"]] * F(4) ** j


def test_fig4_needs_unit_j():
    code, _, err = run("fig", "fig4", "--j", "2")
    assert code == 2 and "j" in err


@pytest.mark.parametrize("name, argv", [
    ("fig1_n1.csv", ("fig1",)),
    ("fig2_n1.csv", ("fig2",)),
    ("fig4_n1_expand.csv", ("fig4", "--j", "1")),
    ("fig4_n1_contract.csv", ("fig4", "--j", "-1")),
])
def test_figure_golden(name, argv, tmp_path):
    target = tmp_path / name
    assert run("fig", *argv, "--n", "1", "--e-min", "-1", "--e-max", "1", "--out", str(target))[0] == 0
    first = target.read_bytes()
    assert run("fig", *argv, "--n", "1", "--e-min", "-1", "--e-max", "1", "--out", str(target))[0] == 0
    assert target.read_bytes() == first
    assert first == (DATA / name).read_bytes()


def test_fig_bad_output_path(tmp_path):
    code, _, err = run("fig", "fig1", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 2 and err


# --- literals round-trip through every command ---------------------------

def test_emitted_literals_reparse():
    p = RnParams(1)
    outputs = [run("enum", "--signed", "--e-min", "-2", "--e-max", "2")[1]]
    outputs += [run("fig", w)[1] for w in ("fig1", "fig2", "fig4")]
    for text in outputs:
        for r in rows(text):
            for key, cell in r.items():
                if key.endswith("literal"):
                    x = parse_literal(cell, p)
                    assert str(x) == cell
                    value_key = "value" if key == "literal" else key[0] + "_value"
                    assert x.value == F(r[value_key])


# --- hierarchy -----------------------------------------------------------

@pytest.mark.parametrize("value, level, reading", [
    ("57/100", "-1", "57"),
    ("0", "-1", "Nondetect"),
    ("123/100", "-1", "Offscale"),
    ("123/100", "0", "01"),
])
def test_hierarchy(value, level, reading):
    code, out, _ = run("hierarchy", "--value", value, "--level", level, "--n", "2", "--base", "10")
    assert code == 0
    assert out.splitlines()[0] == f"reading: {reading}"


def test_hierarchy_unit_and_errors():
    _, out, _ = run("hierarchy", "--value", "1", "--level", "-1")
    assert out.splitlines()[1] == "unit: 1/100"
    assert run("hierarchy", "--value", "-1/2")[0] == 2
    assert run("hierarchy", "--value", "abc")[0] == 2


# --- report / check ------------------------------------------------------

def test_report():
    code, out, _ = run("report", "--n", "100")
    assert code == 0
    assert "points per region: 2^200 - 1 (~1.6e+60)" in out
    assert "covers 55 decimal orders: yes" in out
    assert "points per region: 3" in run("report", "--n", "1")[1]
    assert "covers 55 decimal orders: yes" in run("report", "--n", "92")[1]
    assert "covers 55 decimal orders: no" in run("report", "--n", "91")[1]


def test_check_all_passes():
    code, out, _ = run("check", "--n", "1", "--suite", "all")
    assert code == 0
    lines = out.splitlines()
    assert all(l.startswith("PASS ") for l in lines[:-1])
    assert lines[-1].endswith("0 failed")


def test_check_order_two_ns():
    code, out, _ = run("check", "--n", "1", "2", "--suite", "order", "--e-range", "-3", "3")
    assert code == 0
    assert any("n=2" in l for l in out.splitlines())


def test_check_is_deterministic():
    assert run("check", "--suite", "arith")[1] == run("check", "--suite", "arith")[1]


def test_check_bad_suite():
    assert run("check", "--suite", "bogus")[0] == 2


def test_check_failure_exit_code(monkeypatch):
    from rnspace import checks
    monkeypatch.setitem(checks.SUITES, "space", [lambda n, lo, hi: (False, "forced")])
    code, out, _ = run("check", "--suite", "space")
    assert code == 1
    assert out.splitlines()[0].startswith("FAIL ")
