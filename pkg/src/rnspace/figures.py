"""Tabular data behind the one- and two-dimensional lattice pictures.

Each emitter returns a header and a list of rows of strings so that the CSV
bytes depend only on the arguments.  Values are exact ``p/q`` strings.
"""
from __future__ import annotations

import csv
import io
from fractions import Fraction

from .core import RnError, RnNumber, RnParams, enumerate_values, ordinal, value_of
from .space import SpacePoint, iterate_F, singularity_class

FIG1_HEADER = ["literal", "value", "region"]
FIG2_HEADER = ["x_literal", "y_literal", "x_value", "y_value", "singularity_class"]
FIG4_HEADER = ["series", "old_index", "new_index", "literal", "value"]


def ratio(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def axis(p: RnParams, e_min: int, e_max: int) -> list[RnNumber]:
    """Both signs of every region in range, plus the origin."""
    xs = enumerate_values(p, e_min, e_max, include_negative=True)
    if not any(x.is_zero for x in xs):
        k = sum(1 for x in xs if x.sign < 0)
        xs.insert(k, RnNumber.zero(p.n))
    return xs


def fig1_rows(p: RnParams, e_min: int, e_max: int) -> list[list[str]]:
    return [[str(x), ratio(value_of(x)), str(x.exp)] for x in axis(p, e_min, e_max)]


def fig2_rows(p: RnParams, e_min: int, e_max: int) -> list[list[str]]:
    xs = axis(p, e_min, e_max)
    rows = []
    for x in xs:
        for y in xs:
            cls = singularity_class(SpacePoint.of(x, y))
            rows.append([str(x), str(y), ratio(value_of(x)), ratio(value_of(y)), str(cls)])
    return rows


def fig4_rows(p: RnParams, e_min: int, e_max: int, j: int) -> list[list[str]]:
    """Positive points before and after a one-region expansion or contraction.

    Indices count positive lattice positions from the first point of region
    ``e_min``.  The shift is carried out as ``2**(2n) - 1`` single steps, and
    every point's label moves that many positions outward (``j = +1``) or
    inward (``j = -1``).
    """
    if j not in (1, -1):
        raise RnError("fig4 requires j = +1 or j = -1")
    base = e_min * p.region_size
    originals = enumerate_values(p, e_min, e_max)
    rows = []
    for x in originals:
        i = ordinal(x) - base
        rows.append(["original", str(i), str(i), str(x), ratio(value_of(x))])
    for x in originals:
        y = iterate_F(SpacePoint.of(x), j * p.region_size).coords[0]
        i = ordinal(x) - base
        rows.append(["transformed", str(i), str(ordinal(y) - base), str(y), ratio(value_of(y))])
    for x in originals:
        i = ordinal(x) - base
        rows.append(["relabel", str(i), str(i + j * p.region_size), str(x), ratio(value_of(x))])
    return rows


FIGURES = {
    "fig1": (FIG1_HEADER, fig1_rows),
    "fig2": (FIG2_HEADER, fig2_rows),
    "fig4": (FIG4_HEADER, fig4_rows),
}


def figure_csv(which: str, p: RnParams, e_min: int, e_max: int, j: int = 1) -> str:
    if which not in FIGURES:
        raise RnError(f"unknown figure {which!r}")
    header, emit = FIGURES[which]
    rows = emit(p, e_min, e_max, j) if which == "fig4" else emit(p, e_min, e_max)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
