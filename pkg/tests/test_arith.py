from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from rnspace.arith import (ABSORPTION, CANCELLATION, EXACT, IDENTITY,
                           OVERFLOW_JUMP, TIE_AWAY, CnNumber,
                           UnsupportedOperation, add_n, add_trace, cn_add,
                           cn_mul, div_n, format_complex, mul_n, mul_trace,
                           parse_complex, sub_n)
from rnspace.core import (LiteralError, ParamMismatchError, RnNumber,
                          enumerate_values, round_to_nearest, successor, value_of)
from rnspace.oracle import build_window, oracle_nearest

from conftest import P1, lit

ZERO = RnNumber.zero(1)


def c(re, im):
    return CnNumber(lit(re), lit(im))


def window_numbers(lo, hi, signed=True):
    return st.sampled_from(enumerate_values(P1, lo, hi, signed))


# --- addition ------------------------------------------------------------

def test_worked_addition():
    t = add_trace(lit("(1.0,1)"), lit("(1.0,0)"))
    assert t.result == lit("(1.0,1)")
    assert t.exact == 5
    assert t.path == ABSORPTION


def test_add_identity():
    x = lit("(1.1,-2)")
    assert add_n(x, ZERO) == x
    assert add_n(ZERO, x) == x
    assert add_trace(x, ZERO).path == IDENTITY


def test_add_overflow_jump():
    t = add_trace(lit("(1.1,0)"), lit("(1.1,0)"))
    assert t.result == lit("(0.1,1)")
    assert t.path == OVERFLOW_JUMP
    # 3 truncates to 2, and 2's upper neighbour 4 overshoots the exact sum
    assert value_of(t.result) <= t.exact < value_of(successor(t.result))


def test_add_exact_in_region():
    t = add_trace(lit("(0.1,0)"), lit("(1.0,0)"))
    assert t.result == lit("(1.1,0)")
    assert t.path == EXACT


def test_opposite_sign_cross_region_absorbs():
    # 2 + (-3/2): the lower-region operand is dropped, so the result is 2, not 1/2.
    assert add_n(lit("(0.1,1)"), lit("(-1.1,0)")) == lit("(0.1,1)")


def test_add_mismatched_n():
    with pytest.raises(ParamMismatchError):
        add_n(lit("(1.0,0)"), lit("(01.00,0)", n=2))


@given(window_numbers(-4, 4), window_numbers(-4, 4))
def test_add_commutes(a, b):
    assert add_n(a, b) == add_n(b, a)


@given(window_numbers(-4, 4, signed=False), window_numbers(-4, 4, signed=False))
def test_absorption(a, b):
    if a.exp > b.exp:
        assert add_n(a, b) == a


# --- subtraction ---------------------------------------------------------

def test_sub_examples():
    assert sub_n(lit("(1.0,0)"), lit("(0.1,0)")) == lit("(0.1,0)")
    assert sub_n(lit("(1.0,1)"), lit("(1.0,0)")) == lit("(1.0,1)")
    assert add_trace(lit("(1.0,0)"), lit("(-1.0,0)")).path == CANCELLATION


@given(window_numbers(-4, 4))
def test_sub_self_is_zero(x):
    assert sub_n(x, x).is_zero


# --- multiplication ------------------------------------------------------

def test_worked_multiplication():
    t = mul_trace(lit("(1.1,2)"), lit("(0.1,0)"))
    assert t.result == lit("(1.0,2)")
    assert t.exact == 12
    assert t.path == TIE_AWAY


def test_mul_examples():
    assert mul_n(lit("(1.1,0)"), lit("(1.1,0)")) == lit("(0.1,1)")
    assert mul_n(lit("(1.1,3)"), ZERO).is_zero
    assert mul_n(lit("(-1.1,2)"), lit("(0.1,0)")) == lit("(-1.0,2)")


def test_mul_against_scan():
    w = build_window(P1, -8, 8)
    for a in enumerate_values(P1, -3, 3):
        for b in enumerate_values(P1, -3, 3):
            assert mul_n(a, b) == oracle_nearest(value_of(a) * value_of(b), w)


@given(window_numbers(-6, 6), window_numbers(-6, 6))
def test_mul_sign_rule(a, b):
    r = mul_n(a, b)
    if a.is_zero or b.is_zero:
        assert r.is_zero
    else:
        assert r.sign == a.sign * b.sign
        assert r == round_to_nearest(value_of(a) * value_of(b), P1)


def test_no_division():
    with pytest.raises(UnsupportedOperation, match="not defined in R_n"):
        div_n(lit("(1.0,0)"), lit("(1.0,0)"))


# --- complex -------------------------------------------------------------

def test_cn_add():
    assert cn_add(c("(1.0,1)", "(0.0,0)"), c("(1.0,0)", "(0.0,0)")) == c("(1.0,1)", "(0.0,0)")
    a = c("(1.1,2)", "(-0.1,-1)")
    assert cn_add(a, CnNumber.zero(1)) == a
    assert cn_add(c("(0.0,0)", "(0.1,0)"), c("(0.0,0)", "(0.1,0)")) == c("(0.0,0)", "(1.0,0)")


def test_cn_mul():
    i = c("(0.0,0)", "(0.1,0)")
    # exact product is -1/4, which is (-1.0,-1)
    assert cn_mul(i, i) == c("(-1.0,-1)", "(0.0,0)")
    assert value_of(cn_mul(i, i).re) == F(-1, 4)
    a = c("(1.1,2)", "(-0.1,-1)")
    assert cn_mul(a, c("(1.0,0)", "(0.0,0)")) == a
    assert cn_mul(c("(1.1,2)", "(0.0,0)"), c("(0.1,0)", "(0.0,0)")) == c("(1.0,2)", "(0.0,0)")


def test_cn_mul_rounds_once():
    # (-6 - 6i)(-6 - 4i) = 12 + 60i exactly; the real part rounds once to 16.
    # Rounding 36 and 24 first and then subtracting would give 32.
    a = c("(-1.1,1)", "(-1.1,1)")
    b = c("(-1.1,1)", "(-1.0,1)")
    z = cn_mul(a, b)
    assert (value_of(z.re), value_of(z.im)) == (16, 64)
    assert sub_n(mul_n(a.re, b.re), mul_n(a.im, b.im)) == lit("(0.1,3)")


def test_complex_literals():
    z = parse_complex("((1.0,1),(-0.1,0))", P1)
    assert z == c("(1.0,1)", "(-0.1,0)")
    assert format_complex(z) == "((1.0,1),(-0.1,0))"
    with pytest.raises(LiteralError):
        parse_complex("(1.0,1)", P1)


def test_cn_mixed_n():
    with pytest.raises(ParamMismatchError):
        CnNumber(lit("(1.0,0)"), lit("(01.00,0)", n=2))
