"""Arithmetic on R_n and C_n.

Addition and multiplication round differently.  Addition aligns the smaller
exponent operand by whole regions and truncates, so an operand from a lower
region is absorbed; a carry out of the significand jumps one region up.
Multiplication forms the exact product and rounds it once to the nearest
element, ties away from zero.  Both rules are pinned by the worked examples
``(1.0,1) + (1.0,0) = (1.0,1)`` and ``(1.1,2) * (0.1,0) = (1.0,2)`` at n = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (LiteralError, RnError, RnNumber, RnParams, check_same_n,
                   negate, parse_literal, predecessor, round_to_nearest,
                   successor, value_of)


class UnsupportedOperation(RnError):
    pass


# Trace labels reported alongside results.
EXACT = "exact"
IDENTITY = "identity"
ABSORPTION = "absorption"
OVERFLOW_JUMP = "overflow-jump"
CANCELLATION = "cancellation"
NEAREST = "nearest"
TIE_AWAY = "tie away from zero"
ZERO_OPERAND = "zero operand"


@dataclass(frozen=True)
class Trace:
    """A result together with the exact value it approximates and how it got there."""

    result: object
    exact: object
    path: str


def _signed_mant(x: RnNumber) -> int:
    return x.sign * x.mant


def add_trace(a: RnNumber, b: RnNumber) -> Trace:
    n = check_same_n(a, b)
    exact = value_of(a) + value_of(b)
    if a.is_zero or b.is_zero:
        return Trace(b if a.is_zero else a, exact, IDENTITY)
    big, small = (a, b) if a.exp >= b.exp else (b, a)
    e = big.exp
    shift = 2 * n * (e - small.exp)
    aligned = _signed_mant(small)
    # Truncate toward zero: shift the magnitude, then restore the sign.
    aligned = (abs(aligned) >> shift) * (1 if aligned > 0 else -1)
    total = _signed_mant(big) + aligned
    if total == 0:
        return Trace(RnNumber.zero(n), exact, CANCELLATION)
    sign = 1 if total > 0 else -1
    mag = abs(total)
    if mag >> (2 * n):
        mag >>= 2 * n
        result = RnNumber(n, sign, mag, e + 1)
        path = OVERFLOW_JUMP
    else:
        result = RnNumber(n, sign, mag, e)
        path = ABSORPTION if shift else EXACT
    return Trace(result, exact, path)


def add_n(a: RnNumber, b: RnNumber) -> RnNumber:
    """R_n addition with region alignment, truncation and overflow jump."""
    return add_trace(a, b).result


def sub_n(a: RnNumber, b: RnNumber) -> RnNumber:
    return add_n(a, negate(b))


def sub_trace(a: RnNumber, b: RnNumber) -> Trace:
    return add_trace(a, negate(b))


def _round_trace(exact: Fraction, p: RnParams) -> Trace:
    result = round_to_nearest(exact, p)
    v = value_of(result)
    if v == exact:
        path = EXACT
    elif _is_tie(exact, result, p):
        path = TIE_AWAY
    else:
        path = NEAREST
    return Trace(result, exact, path)


def _is_tie(q: Fraction, chosen: RnNumber, p: RnParams) -> bool:
    # A tie means the neighbour on the near-zero side is equally far away.
    if chosen.is_zero:
        return False
    inward = predecessor(chosen) if chosen.sign == 1 else successor(chosen)
    return abs(value_of(inward) - q) == abs(value_of(chosen) - q)


def mul_trace(a: RnNumber, b: RnNumber) -> Trace:
    n = check_same_n(a, b)
    exact = value_of(a) * value_of(b)
    if a.is_zero or b.is_zero:
        return Trace(RnNumber.zero(n), exact, ZERO_OPERAND)
    return _round_trace(exact, RnParams(n))


def mul_n(a: RnNumber, b: RnNumber) -> RnNumber:
    """Exact product rounded once to nearest, ties away from zero."""
    return mul_trace(a, b).result


def div_n(a: RnNumber, b: RnNumber) -> RnNumber:
    raise UnsupportedOperation("operation not defined in R_n: division")


@dataclass(frozen=True)
class CnNumber:
    re: RnNumber
    im: RnNumber

    def __post_init__(self):
        check_same_n(self.re, self.im)

    @property
    def n(self) -> int:
        return self.re.n

    @classmethod
    def zero(cls, n: int) -> CnNumber:
        z = RnNumber.zero(n)
        return cls(z, z)

    def __str__(self):
        return format_complex(self)


def format_complex(z: CnNumber) -> str:
    return f"({z.re},{z.im})"


def parse_complex(text: str, p: RnParams) -> CnNumber:
    """Parse ``((s.t,e),(s.t,e))``: real part then imaginary part."""
    t = text.strip()
    if not (t.startswith("((") and t.endswith("))")):
        raise LiteralError(f"malformed complex literal {text!r}")
    inner = t[1:-1]
    cut = inner.find("),(")
    if cut < 0:
        raise LiteralError(f"malformed complex literal {text!r}")
    return CnNumber(parse_literal(inner[:cut + 1], p), parse_literal(inner[cut + 2:], p))


def cn_add(a: CnNumber, b: CnNumber) -> CnNumber:
    check_same_n(a.re, b.re)
    return CnNumber(add_n(a.re, b.re), add_n(a.im, b.im))


def cn_exact_product(a: CnNumber, b: CnNumber) -> tuple[Fraction, Fraction]:
    ar, ai, br, bi = (value_of(x) for x in (a.re, a.im, b.re, b.im))
    return ar * br - ai * bi, ar * bi + ai * br


def cn_mul(a: CnNumber, b: CnNumber) -> CnNumber:
    """Complex product computed exactly, then each part rounded once."""
    n = check_same_n(a.re, b.re)
    p = RnParams(n)
    re, im = cn_exact_product(a, b)
    return CnNumber(round_to_nearest(re, p), round_to_nearest(im, p))
