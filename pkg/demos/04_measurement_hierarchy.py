"""
A hierarchy of rulers
=====================

Two-dial instruments (n = 2) whose units differ by a factor of 100.
"""

from fractions import Fraction

from rnspace import RnParams, hierarchy_reading
from rnspace.core import level_unit

p = RnParams(2)

# Level -1 is a meter stick with cm markings, level 0 a 100 m tape with m
# markings, level -2 a cm stick with 0.1 mm markings.
for q in ("57/100", "3/1000", "123/100"):
    value = Fraction(q)
    readings = {j: str(hierarchy_reading(value, j, p)) for j in (-2, -1, 0)}
    print(f"{float(value):>7} m:", ", ".join(
        f"unit {level_unit(j, 2, 10)} m -> {r}" for j, r in readings.items()))
