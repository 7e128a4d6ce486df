"""R_n space and time: lattice points, order maps, scale shifts, singularities.

A point is a tuple of 1 to 3 R_n coordinates.  Zero coordinates are fixed by
every transform here, which keeps the maps total and leaves the origin in place.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (RnError, RnNumber, RnParams, check_same_n, negate,
                   predecessor, step, successor, value_of)


@dataclass(frozen=True)
class SpacePoint:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if not 1 <= len(self.coords) <= 3:
            raise RnError(f"dimension must be 1, 2 or 3, got {len(self.coords)}")
        check_same_n(*self.coords)

    @classmethod
    def of(cls, *coords: RnNumber) -> SpacePoint:
        return cls(coords)

    @classmethod
    def origin(cls, n: int, d: int) -> SpacePoint:
        return cls((RnNumber.zero(n),) * d)

    @property
    def d(self) -> int:
        return len(self.coords)

    @property
    def n(self) -> int:
        return self.coords[0].n

    def values(self) -> tuple:
        return tuple(value_of(c) for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


TimePoint = RnNumber


def _each(x: SpacePoint, f) -> SpacePoint:
    return SpacePoint(tuple(c if c.is_zero else f(c) for c in x.coords))


def F_less(x: SpacePoint) -> SpacePoint:
    """One successor step on every nonzero coordinate."""
    return _each(x, successor)


def F_greater(x: SpacePoint) -> SpacePoint:
    return _each(x, predecessor)


def iterate_F(x: SpacePoint, steps: int) -> SpacePoint:
    """``F_less`` applied ``steps`` times (``F_greater`` when negative)."""
    return _each(x, lambda c: step(c, steps))


def scale_shift(x: SpacePoint, j: int) -> SpacePoint:
    """Move every nonzero coordinate ``j`` regions; values scale by ``2**(2nj)``."""
    return _each(x, lambda c: RnNumber(c.n, c.sign, c.mant, c.exp + j))


def _magnitude_step(c: RnNumber, steps: int) -> RnNumber:
    moved = step(abs(c), steps)
    return moved if c.sign == 1 else negate(moved)


def expand_magnitude(x: SpacePoint, steps: int = 1) -> SpacePoint:
    """Push each nonzero coordinate ``steps`` positions away from zero.

    Unlike :func:`F_less`, which moves negative coordinates toward zero, this
    treats the origin as a source on both sides.
    """
    if steps < 0:
        raise RnError("steps must be non-negative")
    return _each(x, lambda c: _magnitude_step(c, steps))


def contract_magnitude(x: SpacePoint, steps: int = 1) -> SpacePoint:
    """Pull each nonzero coordinate ``steps`` positions toward zero (never onto it)."""
    if steps < 0:
        raise RnError("steps must be non-negative")
    return _each(x, lambda c: _magnitude_step(c, -steps))


def singularity_class(x: SpacePoint) -> int:
    """Dimension of the singularity at ``x``: its number of zero coordinates."""
    return sum(1 for c in x.coords if c.is_zero)


ACCUMULATION_BOUNDARY = "AccumulationBoundary"


def neighbors(c: RnNumber) -> tuple:
    """(lower neighbour, upper neighbour); zero has neither."""
    if c.is_zero:
        return ACCUMULATION_BOUNDARY, ACCUMULATION_BOUNDARY
    return predecessor(c), successor(c)


def pick_epsilon(p: RnParams, e: int) -> TimePoint:
    """Smallest positive time in region ``e``, value ``2**(n(2e-1))``."""
    return RnNumber(p.n, 1, 1, e)


@dataclass(frozen=True)
class DistinguishabilityReport:
    n: int
    points_per_region: int
    min_spacing_region0: Fraction
    region0_extent: int
    jump_factor: int
    decimal_order: int
    covers_55_orders: bool

    def lines(self) -> list[str]:
        def pow2(k, minus_one=False):
            v = 2**k - (1 if minus_one else 0)
            if v < 10**15:
                return str(v)
            return f"2^{k}{' - 1' if minus_one else ''} (~{float(v):.1e})"

        return [
            f"n: {self.n}",
            f"points per region: {pow2(2 * self.n, True)}",
            f"minimal spacing in region 0: 2^-{self.n}",
            f"region 0 extent in spacings: {pow2(2 * self.n, True)}",
            f"jump factor: {pow2(2 * self.n)}",
            f"decimal order of 2^{2 * self.n}: {self.decimal_order}",
            f"covers 55 decimal orders: {'yes' if self.covers_55_orders else 'no'}",
        ]


def distinguishability_report(n: int) -> DistinguishabilityReport:
    p = RnParams(n)
    radix = p.radix
    return DistinguishabilityReport(
        n=n,
        points_per_region=radix - 1,
        min_spacing_region0=Fraction(1, 2**n),
        region0_extent=radix - 1,
        jump_factor=radix,
        decimal_order=len(str(radix)) - 1,
        covers_55_orders=radix >= 10**55,
    )
