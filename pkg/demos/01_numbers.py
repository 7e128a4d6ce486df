"""
Finite-string numbers R_n
=========================

Build elements, read their exact values, walk the order one step at a time.
"""

from fractions import Fraction

from rnspace import (RnParams, enumerate_values, parse_literal, predecessor,
                     round_to_nearest, successor, value_of)

p = RnParams(1)

# n = 1: a two-bit significand s.t and a region exponent e.
# The positive values of regions -1, 0 and 1 in increasing order:
for x in enumerate_values(p, -1, 1):
    print(f"{str(x):>10}  {value_of(x)}")

# Each region holds 2**(2n) - 1 = 3 evenly spaced values; the spacing jumps
# by 2**(2n) = 4 between regions.
x = parse_literal("(1.1,0)", p)
print("successor of", x, "is", successor(x), "=", value_of(successor(x)))
print("predecessor of", x, "is", predecessor(x))

# Negative values step toward zero under the successor map.
y = parse_literal("(-0.1,0)", p)
print("successor of", y, "is", successor(y), "=", value_of(successor(y)))

# Any rational rounds to its nearest element; ties go away from zero.
for q in (12, "5/16", "9/4"):
    r = round_to_nearest(Fraction(q), p)
    print(f"round({q}) = {r} = {value_of(r)}")

# Wider significands give longer lattice-like regions.
p2 = RnParams(2)
print(len(enumerate_values(p2, 0, 0)), "values in region 0 for n = 2")
