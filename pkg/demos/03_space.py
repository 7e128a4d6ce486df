"""
R_n space
=========

Order maps, scale shifts and the singular points of a two-dimensional lattice.
"""

from rnspace import (RnParams, SpacePoint, distinguishability_report,
                     enumerate_values, expand_magnitude, iterate_F,
                     neighbors, parse_literal, pick_epsilon, scale_shift,
                     singularity_class, value_of)
from rnspace.figures import figure_csv

p = RnParams(1)
lit = lambda text: parse_literal(text, p)

# Three single steps on a positive coordinate are one pure jump.
x = SpacePoint.of(lit("(0.1,0)"), lit("(1.1,1)"))
print(x, "->", iterate_F(x, 3), "==", scale_shift(x, 1))

# On negative coordinates the order map heads toward zero; the magnitude
# map pushes away from the origin on both sides.
y = SpacePoint.of(lit("(-1.0,2)"))
print("order map:", iterate_F(y, 3), " expansion:", expand_magnitude(y, 3))

# Zero is the only point without nearest neighbours.
for c in (lit("(1.0,0)"), lit("(0.0,0)")):
    print(c, "neighbours:", *map(str, neighbors(c)))

# Count singular points of each dimension on a small 2d grid.
axis = enumerate_values(p, -1, 1, include_negative=True)
counts = {}
for a in axis:
    for b in axis:
        k = singularity_class(SpacePoint.of(a, b))
        counts[k] = counts.get(k, 0) + 1
print("singularity classes on the grid:", dict(sorted(counts.items())))

# Start times can be pushed as close to t = 0 as needed.
for e in (0, -5, -50):
    print(f"epsilon in region {e}: {value_of(pick_epsilon(p, e))}")

# Figure data for the expansion picture.
print(figure_csv("fig4", p, 0, 1, j=1))

for line in distinguishability_report(100).lines():
    print(line)
