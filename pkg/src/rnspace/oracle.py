"""Brute-force reference for ordering and rounding.

Windows are built by listing every significand/exponent pair, computing its
value straight from the bit string, and sorting by that value.  Nothing here
calls the successor, comparison or rounding code it is used to audit.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction

from .core import RnError, RnNumber, RnParams

DEFAULT_CAP = 10**6


class WindowError(RnError):
    """Raised when a query needs values outside the window."""


def bits_value(sig: str, exp: int, sign: int = 1) -> Fraction:
    """Value of ``sign * s.t * 2**(2n*exp)`` computed from the bit string."""
    n = len(sig) // 2
    whole, frac = sig[:n], sig[n:]
    v = Fraction(int(whole, 2)) + Fraction(int(frac, 2), 2**n)
    return sign * v * Fraction(4) ** (n * exp)


@dataclass(frozen=True, eq=False)
class EnumerationWindow:
    p: RnParams
    e_min: int
    e_max: int
    signed: bool
    values: tuple  # ascending (RnNumber, Fraction) pairs

    def __len__(self):
        return len(self.values)

    def index(self, x: RnNumber) -> int:
        try:
            return self._positions[x]
        except KeyError:
            raise WindowError(f"{x} is not in the window") from None

    @cached_property
    def _positions(self) -> dict:
        return {y: i for i, (y, _) in enumerate(self.values)}

    @property
    def numbers(self) -> list[RnNumber]:
        return [x for x, _ in self.values]

    @cached_property
    def rationals(self) -> list[Fraction]:
        return [v for _, v in self.values]


def window_size(p: RnParams, e_min: int, e_max: int, signed: bool) -> int:
    per_sign = (e_max - e_min + 1) * (p.radix - 1)
    if not signed:
        return per_sign
    return 2 * per_sign + (1 if e_min <= 0 <= e_max else 0)


def build_window(p: RnParams, e_min: int, e_max: int, signed: bool = False,
                 cap: int = DEFAULT_CAP) -> EnumerationWindow:
    if e_min > e_max:
        raise WindowError(f"empty exponent range [{e_min}, {e_max}]")
    size = window_size(p, e_min, e_max, signed)
    if size > cap:
        raise WindowError(f"window of {size} values exceeds cap {cap}")
    width = 2 * p.n
    entries = []
    signs = (1, -1) if signed else (1,)
    for e in range(e_min, e_max + 1):
        for m in range(1, 2**width):
            sig = format(m, f"0{width}b")
            for s in signs:
                entries.append((RnNumber.from_bits(sig, e, s), bits_value(sig, e, s)))
    if signed and e_min <= 0 <= e_max:
        entries.append((RnNumber.zero(p.n), Fraction(0)))
    entries.sort(key=lambda pair: pair[1])
    vals = [v for _, v in entries]
    if any(a == b for a, b in zip(vals, vals[1:])):
        raise WindowError("duplicate values in window")
    return EnumerationWindow(p, e_min, e_max, signed, tuple(entries))


def _sgn(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _is_edge(w: EnumerationWindow, i: int) -> bool:
    # An element is on the window's edge if values outside the exponent range
    # could sit next to it: the two ends, zero, and anything beside the gap
    # around zero left by the missing low-exponent regions.
    last = len(w.values) - 1
    if i in (0, last):
        return True
    v = w.values[i][1]
    lo, hi = w.values[i - 1][1], w.values[i + 1][1]
    return v == 0 or lo == 0 or hi == 0 or (lo < 0 < v) or (v < 0 < hi)


def oracle_nearest(q, w: EnumerationWindow, method: str = "scan") -> RnNumber:
    """Nearest window value to ``q``; ties go to the larger magnitude.

    ``method="scan"`` is the audit path and looks at every entry;
    ``"bisect"`` only looks at the two entries bracketing ``q``.
    """
    q = Fraction(q)
    if method == "scan":
        candidates = range(len(w.values))
    elif method == "bisect":
        k = bisect.bisect_left(w.rationals, q)
        candidates = [i for i in (k - 1, k) if 0 <= i < len(w.values)]
    else:
        raise ValueError(f"unknown method {method!r}")
    best_i, best_d = None, None
    for i in candidates:
        v = w.values[i][1]
        d = abs(v - q)
        if best_d is None or d < best_d or (d == best_d and abs(v) > abs(w.values[best_i][1])):
            best_i, best_d = i, d
    if best_d != 0 and _is_edge(w, best_i):
        raise WindowError(f"nearest value to {q} is at the window edge; widen the window")
    return w.values[best_i][0]


def oracle_tie(q, w: EnumerationWindow) -> bool:
    """True when two window values are equally close to ``q``."""
    q = Fraction(q)
    ds = sorted(abs(v - q) for _, v in w.values)
    return len(ds) > 1 and ds[0] == ds[1]


def oracle_successor(x: RnNumber, w: EnumerationWindow) -> RnNumber:
    i = w.index(x)
    if x.is_zero:
        raise WindowError("zero has no successor")
    if i == len(w.values) - 1:
        raise WindowError(f"{x} is the last element of the window")
    nxt, v = w.values[i + 1]
    if _sgn(v) != x.sign:
        raise WindowError(f"successor of {x} lies in a region below the window")
    return nxt


def oracle_predecessor(x: RnNumber, w: EnumerationWindow) -> RnNumber:
    i = w.index(x)
    if x.is_zero:
        raise WindowError("zero has no predecessor")
    if i == 0:
        raise WindowError(f"{x} is the first element of the window")
    prev, v = w.values[i - 1]
    if _sgn(v) != x.sign:
        raise WindowError(f"predecessor of {x} lies in a region below the window")
    return prev
