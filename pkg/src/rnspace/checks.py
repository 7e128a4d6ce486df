"""Property suites over exhaustive exponent windows.

Each check takes ``(n, e_min, e_max)`` and returns ``(ok, detail)``.  The
suites compare the implementation with the brute-force windows in
:mod:`rnspace.oracle` wherever a reference answer exists.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .arith import CnNumber, add_n, cn_exact_product, cn_mul, mul_n, sub_n
from .core import (RnNumber, RnParams, compare, enumerate_values,
                   hierarchy_reading, negate, predecessor, round_to_nearest,
                   successor, value_of, Reading)
from .oracle import (WindowError, build_window, oracle_nearest,
                     oracle_predecessor, oracle_successor)
from .space import (F_greater, F_less, SpacePoint, contract_magnitude,
                    expand_magnitude, iterate_F, scale_shift, singularity_class)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    n: int
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        tail = f" {self.detail}" if self.detail else ""
        return f"{tag} {self.suite}.{self.name} n={self.n}{tail}"


def _first_failure(pairs):
    for ok, what in pairs:
        if not ok:
            return False, what
    return True, ""


# --- order ---------------------------------------------------------------

def successor_adjacency(n, e_min, e_max):
    w = build_window(RnParams(n), e_min, e_max, signed=True)
    checked = 0
    for x in w.numbers:
        if x.is_zero:
            continue
        for ref, impl in ((oracle_successor, successor), (oracle_predecessor, predecessor)):
            try:
                expected = ref(x, w)
            except WindowError:
                continue
            checked += 1
            if impl(x) != expected:
                return False, f"{impl.__name__}({x}) = {impl(x)}, oracle {expected}"
    return True, f"{checked} oracle comparisons"


def inverse_pair(n, e_min, e_max):
    xs = [x for x in enumerate_values(RnParams(n), e_min, e_max, True) if not x.is_zero]
    return _first_failure(
        (predecessor(successor(x)) == x and successor(predecessor(x)) == x, str(x))
        for x in xs)


def negative_symmetry(n, e_min, e_max):
    xs = enumerate_values(RnParams(n), e_min, e_max)
    return _first_failure(
        (successor(negate(x)) == negate(predecessor(x)), str(x)) for x in xs)


def region_structure(n, e_min, e_max):
    p = RnParams(n)
    for e in range(e_min, e_max + 1):
        vals = [value_of(x) for x in enumerate_values(p, e, e)]
        if len(vals) != p.region_size:
            return False, f"region {e} has {len(vals)} values"
        step = Fraction(2) ** (n * (2 * e - 1))
        if any(b - a != step for a, b in zip(vals, vals[1:])) or vals[0] != step:
            return False, f"region {e} step is not {step}"
        nxt = [value_of(x) for x in enumerate_values(p, e + 1, e + 1)]
        if nxt[1] - nxt[0] != p.radix * step:
            return False, f"jump ratio wrong after region {e}"
        if nxt[0] / vals[-1] != Fraction(p.radix, p.radix - 1):
            return False, f"cross-jump value ratio wrong after region {e}"
    return True, ""


def canonical_uniqueness(n, e_min, e_max):
    w = build_window(RnParams(n), e_min, e_max, signed=True)
    if any(value_of(x) != v for x, v in w.values):
        return False, "value_of disagrees with bit-string value"
    vals = [value_of(x) for x in w.numbers]
    if len(set(vals)) != len(vals):
        return False, "two representations share a value"
    return True, ""


def compare_agrees(n, e_min, e_max):
    xs = enumerate_values(RnParams(n), e_min, e_max, True)
    vals = [value_of(x) for x in xs]
    for (a, va), (b, vb) in itertools.product(zip(xs, vals), repeat=2):
        if compare(a, b) != (va > vb) - (va < vb):
            return False, f"compare({a}, {b})"
    return True, f"{len(xs) ** 2} pairs"


def rounding_agrees(n, e_min, e_max, samples=400, seed=0):
    p = RnParams(n)
    w = build_window(p, e_min - 1, e_max + 1, signed=True)
    lo, hi = Fraction(2) ** (n * (2 * e_min - 1)), value_of(RnNumber(n, 1, p.radix - 1, e_max))
    vals = [v for v in w.rationals if lo <= abs(v) <= hi]
    queries = list(vals)
    queries += [(a + b) / 2 for a, b in zip(vals, vals[1:]) if a * b > 0]
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = sorted(rng.sample(vals, 2))
        if a * b > 0:
            queries.append(a + (b - a) * Fraction(rng.randrange(1, 1000), 1000))
    for q in queries:
        got, ref = round_to_nearest(q, p), oracle_nearest(q, w, "bisect")
        if got != ref:
            return False, f"round_to_nearest({q}) = {got}, oracle {ref}"
    return True, f"{len(queries)} queries"


def hierarchy_levels(n, e_min, e_max, base=10, samples=1000, seed=0):
    p = RnParams(n)
    rng = random.Random(seed)
    for _ in range(samples):
        q = Fraction(rng.randrange(0, 10**6), rng.randrange(1, 10**4))
        j = rng.randrange(-3, 3)
        if hierarchy_reading(q, j, p, base).kind is Reading.OFFSCALE:
            if hierarchy_reading(q, j + 1, p, base).kind is Reading.NONDETECT:
                return False, f"q={q} j={j}"
    return True, f"{samples} samples"


# --- arith ---------------------------------------------------------------

def _positives(n, e_min, e_max):
    return enumerate_values(RnParams(n), e_min, e_max)


def add_absorption(n, e_min, e_max):
    xs = _positives(n, e_min, e_max)
    return _first_failure(
        (add_n(a, b) == a, f"{a} + {b}") for a in xs for b in xs if a.exp > b.exp)


def add_commutative(n, e_min, e_max):
    xs = enumerate_values(RnParams(n), e_min, e_max, True)
    return _first_failure((add_n(a, b) == add_n(b, a), f"{a} + {b}") for a in xs for b in xs)


def add_bounded_error(n, e_min, e_max):
    """Same-sign sums truncate onto the grid value just below the exact sum."""
    p = RnParams(n)
    xs = enumerate_values(p, e_min, e_max, True)
    for a in xs:
        for b in xs:
            if a.is_zero or b.is_zero or a.sign != b.sign:
                continue
            exact = value_of(a) + value_of(b)
            r = add_n(a, b)
            v = value_of(r)
            if abs(v) > abs(exact):
                return False, f"{a} + {b} overshoots"
            if v != exact and abs(value_of(successor(abs(r)))) <= abs(exact):
                return False, f"{a} + {b} = {r} skips a grid value"
    return True, ""


def add_cancellation(n, e_min, e_max):
    xs = enumerate_values(RnParams(n), e_min, e_max, True)
    return _first_failure(
        (add_n(x, negate(x)).is_zero and sub_n(x, x).is_zero, str(x)) for x in xs)


def mul_oracle(n, e_min, e_max):
    p = RnParams(n)
    xs = _positives(n, e_min, e_max)
    w = build_window(p, 2 * e_min - 2, 2 * e_max + 2)
    method = "scan" if len(xs) <= 30 else "bisect"
    for a in xs:
        for b in xs:
            ref = oracle_nearest(value_of(a) * value_of(b), w, method)
            if mul_n(a, b) != ref:
                return False, f"{a} * {b} = {mul_n(a, b)}, oracle {ref}"
    return True, f"{len(xs) ** 2} pairs ({method})"


def mul_signs(n, e_min, e_max):
    xs = enumerate_values(RnParams(n), e_min, e_max, True)
    for a in xs:
        for b in xs:
            r = mul_n(a, b)
            if a.is_zero or b.is_zero:
                if not r.is_zero:
                    return False, f"{a} * {b}"
            elif r.sign != a.sign * b.sign:
                return False, f"{a} * {b}"
    return True, ""


def cn_single_rounding(n, e_min, e_max, samples=300, seed=0):
    p = RnParams(n)
    xs = enumerate_values(p, e_min, e_max, True)
    rng = random.Random(seed)
    for _ in range(samples):
        a = CnNumber(rng.choice(xs), rng.choice(xs))
        b = CnNumber(rng.choice(xs), rng.choice(xs))
        re, im = cn_exact_product(a, b)
        got = cn_mul(a, b)
        if got.re != round_to_nearest(re, p) or got.im != round_to_nearest(im, p):
            return False, f"{a} * {b}"
    return True, f"{samples} samples"


# --- space ---------------------------------------------------------------

def order_embedding(n, e_min, e_max):
    return compare_agrees(n, e_min, e_max)


def _nonzero_points(n, e_min, e_max, d):
    xs = [x for x in enumerate_values(RnParams(n), e_min, e_max, True) if not x.is_zero]
    return [SpacePoint(c) for c in itertools.product(xs, repeat=d)]


def transform_inverse(n, e_min, e_max):
    for d in (1, 2):
        for x in _nonzero_points(n, e_min, e_max, d):
            if F_greater(F_less(x)) != x or F_less(F_greater(x)) != x:
                return False, str(x)
    return True, ""


def _walk(x, f, k):
    for _ in range(k):
        x = f(x)
    return x


def scale_jump(n, e_min, e_max):
    """``2**(2n) - 1`` order steps make one region jump.

    The jump is outward on positive coordinates; on negative ones the order
    maps move toward zero, so the same walk lands one region inward.  The
    magnitude maps jump outward on both sides.
    """
    k = RnParams(n).region_size
    for x in _nonzero_points(n, e_min, e_max, 1):
        j = x.coords[0].sign
        fwd = _walk(x, F_less, k)
        if fwd != scale_shift(x, j) or iterate_F(x, k) != fwd:
            return False, f"F_less jump at {x}"
        back = _walk(x, F_greater, k)
        if back != scale_shift(x, -j) or iterate_F(x, -k) != back:
            return False, f"F_greater jump at {x}"
        if expand_magnitude(x, k) != scale_shift(x, 1) or contract_magnitude(x, k) != scale_shift(x, -1):
            return False, f"magnitude jump at {x}"
    return True, ""


def scale_invariance(n, e_min, e_max):
    xs = enumerate_values(RnParams(n), e_min, e_max, True)
    for x in xs:
        pt = SpacePoint.of(x)
        for j in range(-5, 6):
            if scale_shift(pt, j).values()[0] != value_of(x) * Fraction(2) ** (2 * n * j):
                return False, f"{x} j={j}"
    return True, ""


def translation_jump_ratio(n, e_min, e_max):
    p = RnParams(n)
    for e in range(e_min, e_max + 1):
        x = RnNumber(n, 1, 1, e)
        jumps = 0
        for _ in range(p.radix):
            y = successor(x)
            jumps += y.exp != x.exp
            x = y
        if jumps != 1:
            return False, f"region {e}: {jumps} jumps in {p.radix} steps"
    return True, ""


def expansion_monotone(n, e_min, e_max):
    for x in _nonzero_points(n, e_min, e_max, 1):
        v = abs(x.values()[0])
        out, inn = expand_magnitude(x), contract_magnitude(x)
        if not abs(out.values()[0]) > v or not 0 < abs(inn.values()[0]) < v:
            return False, str(x)
    return True, ""


def singularity_counts(n, e_min, e_max):
    xs = enumerate_values(RnParams(n), e_min, e_max, True)
    if not any(x.is_zero for x in xs):
        xs.append(RnNumber.zero(n))
    classes = {}
    for x, y in itertools.product(xs, repeat=2):
        k = singularity_class(SpacePoint.of(x, y))
        on_axis = x.is_zero != y.is_zero
        if (k == 1) != on_axis:
            return False, f"({x}, {y}) class {k}"
        classes[k] = classes.get(k, 0) + 1
    if classes.get(2) != 1:
        return False, f"{classes.get(2, 0)} class-2 points"
    return True, ""


def fixed_origin(n, e_min, e_max):
    for d in (1, 2, 3):
        o = SpacePoint.origin(n, d)
        for k in (-7, -1, 0, 1, 3, 15, 100):
            if iterate_F(o, k) != o or scale_shift(o, k) != o:
                return False, f"d={d} k={k}"
        if F_less(o) != o or F_greater(o) != o:
            return False, f"d={d}"
    return True, ""


SUITES = {
    "order": [successor_adjacency, inverse_pair, negative_symmetry, region_structure,
              canonical_uniqueness, compare_agrees, rounding_agrees, hierarchy_levels],
    "arith": [add_absorption, add_commutative, add_bounded_error, add_cancellation,
              mul_oracle, mul_signs, cn_single_rounding],
    "space": [order_embedding, transform_inverse, scale_jump, scale_invariance,
              translation_jump_ratio, expansion_monotone, singularity_counts, fixed_origin],
}


def run(suites, ns, e_min, e_max) -> list[CheckResult]:
    results = []
    for suite in suites:
        for n in ns:
            for check in SUITES[suite]:
                ok, detail = check(n, e_min, e_max)
                results.append(CheckResult(suite, check.__name__, n, ok, detail))
    return results
