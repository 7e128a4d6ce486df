"""Finite-string numbers R_n: representation, order, successor maps, rounding.

An element of R_n is a sign, a significand of ``2n`` bits read as ``s.t``
(binal point after the first ``n`` bits) and an unbounded region exponent
``e``.  Its value is ``sign * s.t * 2**(2*n*e)``; all value semantics go
through :class:`fractions.Fraction`, never through floats.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


class RnError(ValueError):
    """Base class for errors raised by rnspace."""


class ParamMismatchError(RnError):
    pass


class ZeroHasNoSuccessor(RnError):
    pass


class ZeroHasNoPredecessor(RnError):
    pass


class LiteralError(RnError):
    pass


@dataclass(frozen=True)
class RnParams:
    """Half the significand width: significands carry ``2 * n`` bits."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise RnError(f"n must be a positive integer, got {self.n!r}")

    @property
    def width(self) -> int:
        return 2 * self.n

    @property
    def radix(self) -> int:
        """Number of significand patterns, ``2**(2n)``; also the jump factor."""
        return 1 << (2 * self.n)

    @property
    def region_size(self) -> int:
        """Positive values per exponent region, ``2**(2n) - 1``."""
        return self.radix - 1


@total_ordering
@dataclass(frozen=True)
class RnNumber:
    """One element of R_n.

    ``mant`` is the significand read as an unsigned ``2n``-bit integer, so the
    bit string ``sig`` is ``format(mant, '0{2n}b')``.  Zero is the single
    value ``(+, 0...0, 0)``; every other value has ``mant >= 1``.
    """

    n: int
    sign: int
    mant: int
    exp: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise RnError(f"n must be a positive integer, got {self.n!r}")
        if self.sign not in (1, -1):
            raise RnError(f"sign must be +1 or -1, got {self.sign!r}")
        if not 0 <= self.mant < (1 << (2 * self.n)):
            raise RnError(f"significand {self.mant} does not fit in {2 * self.n} bits")
        if self.mant == 0 and (self.exp != 0 or self.sign != 1):
            raise RnError("zero must be represented as (+, 0...0, 0)")

    @classmethod
    def zero(cls, n: int) -> RnNumber:
        return cls(n, 1, 0, 0)

    @classmethod
    def from_bits(cls, sig: str, exp: int, sign: int = 1) -> RnNumber:
        if len(sig) % 2 or not sig or set(sig) - {"0", "1"}:
            raise RnError(f"significand must be an even-length bit string, got {sig!r}")
        return cls(len(sig) // 2, sign, int(sig, 2), exp)

    @property
    def params(self) -> RnParams:
        return RnParams(self.n)

    @property
    def sig(self) -> str:
        return format(self.mant, f"0{2 * self.n}b")

    @property
    def is_zero(self) -> bool:
        return self.mant == 0

    @property
    def value(self) -> Fraction:
        return value_of(self)

    def __neg__(self) -> RnNumber:
        return negate(self)

    def __abs__(self) -> RnNumber:
        return self if self.sign == 1 else negate(self)

    def __lt__(self, other):
        if not isinstance(other, RnNumber):
            return NotImplemented
        return compare(self, other) < 0

    def __str__(self):
        return format_literal(self)


def check_same_n(*xs: RnNumber) -> int:
    ns = {x.n for x in xs}
    if len(ns) != 1:
        raise ParamMismatchError(f"operands have different n: {sorted(ns)}")
    return ns.pop()


def value_of(x: RnNumber) -> Fraction:
    """Exact value ``sign * mant * 2**-n * 2**(2n*exp)``."""
    scale = Fraction(2) ** (2 * x.n * x.exp - x.n)
    return x.sign * x.mant * scale


def compare(a: RnNumber, b: RnNumber) -> int:
    """Return -1, 0 or 1 as ``a`` is below, equal to or above ``b``.

    Works on the fields directly: regions are disjoint and ordered by
    exponent, so no rational arithmetic is needed even for huge exponents.
    """
    check_same_n(a, b)
    ka, kb = _signed_key(a), _signed_key(b)
    return (ka > kb) - (ka < kb)


def _signed_key(x: RnNumber):
    if x.is_zero:
        return (0,)
    if x.sign == 1:
        return (1, x.exp, x.mant)
    return (-1, -x.exp, -x.mant)


def negate(x: RnNumber) -> RnNumber:
    if x.is_zero:
        return x
    return RnNumber(x.n, -x.sign, x.mant, x.exp)


# Positive values are indexed by ordinal = exp * (2**(2n) - 1) + (mant - 1);
# f_< on positives is ordinal + 1, which turns step counts into additions.

def ordinal(x: RnNumber) -> int:
    """Position of ``|x|`` in the ordering of positive values (``(0.1,0)`` is 0)."""
    if x.is_zero:
        raise RnError("zero has no ordinal")
    return x.exp * ((1 << (2 * x.n)) - 1) + x.mant - 1


def from_ordinal(k: int, n: int, sign: int = 1) -> RnNumber:
    exp, r = divmod(k, (1 << (2 * n)) - 1)
    return RnNumber(n, sign, r + 1, exp)


def _step_magnitude(x: RnNumber, steps: int) -> RnNumber:
    return from_ordinal(ordinal(x) + steps, x.n, x.sign)


def successor(x: RnNumber) -> RnNumber:
    """The map f_<: the next larger element of R_n.

    On positive values this adds one unit in the last place, or jumps to
    ``(0...01, exp + 1)`` from the all-ones significand.  Negative values use
    ``f_<(-y) = -f_>(y)``.  Zero has no successor.
    """
    if x.is_zero:
        raise ZeroHasNoSuccessor("f_< is not defined at 0")
    if x.sign == 1:
        if x.mant == (1 << (2 * x.n)) - 1:
            return RnNumber(x.n, 1, 1, x.exp + 1)
        return RnNumber(x.n, 1, x.mant + 1, x.exp)
    return negate(predecessor(negate(x)))


def predecessor(x: RnNumber) -> RnNumber:
    """The inverse map f_>; never returns zero."""
    if x.is_zero:
        raise ZeroHasNoPredecessor("0 is not in the range of f_<")
    if x.sign == 1:
        if x.mant == 1:
            return RnNumber(x.n, 1, (1 << (2 * x.n)) - 1, x.exp - 1)
        return RnNumber(x.n, 1, x.mant - 1, x.exp)
    return negate(successor(negate(x)))


def step(x: RnNumber, steps: int) -> RnNumber:
    """Apply f_< ``steps`` times (f_> for negative ``steps``) in O(1)."""
    if x.is_zero:
        if steps:
            raise (ZeroHasNoSuccessor if steps > 0 else ZeroHasNoPredecessor)(
                "cannot step from 0")
        return x
    return _step_magnitude(x, steps if x.sign == 1 else -steps)


def enumerate_values(p: RnParams, e_min: int, e_max: int,
                     include_negative: bool = False) -> list[RnNumber]:
    """All elements with exponent in ``[e_min, e_max]``, ascending.

    Zero is included when ``0`` lies in the exponent range, since its
    canonical exponent is 0.
    """
    if e_min > e_max:
        raise RnError(f"empty exponent range [{e_min}, {e_max}]")
    n = p.n
    positives = [RnNumber(n, 1, m, e)
                 for e in range(e_min, e_max + 1)
                 for m in range(1, p.radix)]
    out = []
    if include_negative:
        out.extend(negate(x) for x in reversed(positives))
    if include_negative and e_min <= 0 <= e_max:
        out.append(RnNumber.zero(n))
    out.extend(positives)
    return out


def _floor_log2(q: Fraction) -> int:
    a, b = q.numerator, q.denominator
    k = a.bit_length() - b.bit_length()
    # 2**k <= a/b  <=>  a * 2**-k >= b
    if (a << -k if k < 0 else a) < (b << k if k > 0 else b):
        k -= 1
    return k


def region_of(q: Fraction, p: RnParams) -> int:
    """Exponent ``e`` whose region ``[2**(2ne-n), 2**(2n(e+1)-n))`` holds ``|q|``."""
    return (_floor_log2(abs(Fraction(q))) + p.n) // (2 * p.n)


def round_to_nearest(q, p: RnParams) -> RnNumber:
    """Nearest element of R_n to the rational ``q``; ties go away from zero.

    Every positive rational lies in some region, so there is no underflow or
    overflow: the grid between ``2**(2ne-n)`` and the next region's minimum
    is exactly the multiples of the region step.
    """
    q = Fraction(q)
    n = p.n
    if q == 0:
        return RnNumber.zero(n)
    sign = 1 if q > 0 else -1
    mag = abs(q)
    e = region_of(mag, p)
    units = mag / Fraction(2) ** (2 * n * e - n)
    m = (units + Fraction(1, 2)).__floor__()
    if m == p.radix:
        return RnNumber(n, sign, 1, e + 1)
    return RnNumber(n, sign, m, e)


_LITERAL = re.compile(r"\(\s*(-?)([01]+)\.([01]+)\s*,\s*([+-]?\d+)\s*\)")


def parse_literal(text: str, p: RnParams) -> RnNumber:
    """Parse ``(s.t,e)`` or ``(-s.t,e)``; ``s`` and ``t`` hold ``n`` bits each."""
    m = _LITERAL.fullmatch(text.strip())
    if not m:
        raise LiteralError(f"malformed literal {text!r}")
    neg, s, t, e = m.groups()
    if len(s) != p.n or len(t) != p.n:
        raise LiteralError(f"{text!r}: expected {p.n} bits on each side of the binal point")
    mant, exp = int(s + t, 2), int(e)
    if mant == 0:
        if exp != 0:
            raise LiteralError(f"{text!r}: zero significand requires exponent 0")
        return RnNumber.zero(p.n)
    return RnNumber(p.n, -1 if neg else 1, mant, exp)


def format_literal(x: RnNumber) -> str:
    sig = x.sig
    sign = "-" if x.sign < 0 else ""
    return f"({sign}{sig[:x.n]}.{sig[x.n:]},{x.exp})"


class Reading(enum.Enum):
    NONDETECT = "Nondetect"
    DIGITS = "Digits"
    OFFSCALE = "Offscale"


@dataclass(frozen=True)
class HierarchyReading:
    kind: Reading
    digits: str | None = None

    def __str__(self):
        return self.digits if self.kind is Reading.DIGITS else self.kind.value


_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def level_unit(j: int, n: int, base: int) -> Fraction:
    return Fraction(base) ** (n * j)


def hierarchy_reading(q, j: int, p: RnParams, base: int = 10) -> HierarchyReading:
    """Read ``q`` on the level-``j`` instrument of an n-dial hierarchy.

    The level unit is ``base**(n*j)``; level ``j + 1`` has a unit ``base**n``
    times larger, so whatever is offscale at ``j`` registers at ``j + 1``.
    """
    q = Fraction(q)
    if q < 0:
        raise RnError("hierarchy readings are defined for non-negative values")
    if not 2 <= base <= len(_DIGITS):
        raise RnError(f"base must be in [2, {len(_DIGITS)}]")
    count = (q / level_unit(j, p.n, base)).__floor__()
    if count == 0:
        return HierarchyReading(Reading.NONDETECT)
    if count >= base ** p.n:
        return HierarchyReading(Reading.OFFSCALE)
    digits = []
    for _ in range(p.n):
        count, d = divmod(count, base)
        digits.append(_DIGITS[d])
    return HierarchyReading(Reading.DIGITS, "".join(reversed(digits)))
