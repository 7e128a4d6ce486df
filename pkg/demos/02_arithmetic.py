"""
Arithmetic with roundoff
========================

Addition truncates across regions; multiplication rounds the exact product.
"""

from rnspace import CnNumber, RnNumber, RnParams, parse_literal, value_of
from rnspace.arith import add_trace, cn_mul, mul_trace

p = RnParams(1)
lit = lambda text: parse_literal(text, p)

# 4 + 1: the smaller operand lives one region down and is shifted out entirely.
t = add_trace(lit("(1.0,1)"), lit("(1.0,0)"))
print(f"(1.0,1) + (1.0,0) = {t.result}   exact {t.exact}, {t.path}")

# 3/2 + 3/2 carries out of the significand and jumps one region up.
t = add_trace(lit("(1.1,0)"), lit("(1.1,0)"))
print(f"(1.1,0) + (1.1,0) = {t.result}   exact {t.exact}, {t.path}")

# 24 * 1/2 = 12 sits exactly between 8 and 16; ties round away from zero.
t = mul_trace(lit("(1.1,2)"), lit("(0.1,0)"))
print(f"(1.1,2) * (0.1,0) = {t.result}   exact {t.exact}, {t.path}")

# Complex pairs: the exact product is rounded once per part.
zero = RnNumber.zero(1)
i = CnNumber(zero, lit("(0.1,0)"))          # i/2
z = cn_mul(i, i)
print(f"(i/2)^2 = {z} = {value_of(z.re)} + {value_of(z.im)}i")
