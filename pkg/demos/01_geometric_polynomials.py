"""
Geometric polynomials and ordered Bell numbers
==============================================

Build w_n(x) = sum_k S(n,k) k! x^k, check it against its generating
function 1/(1 - x(e^t - 1)), and read off ordered Bell and Genocchi numbers.
"""

from fractions import Fraction

from geomharm import genocchi, geometric
from geomharm.geometric import geometric_gf_oracle, reflect_gp

# The first few polynomials, in the canonical text form used by the CLI
for n in range(6):
    print(f"w_{n}(x) = {geometric(n)}")

# Ordered Bell numbers are the values at x = 1
print("ordered Bell:", [int(geometric(n)(1)) for n in range(10)])

# The generating-function expansion is computed with series arithmetic only,
# so agreement is a genuine check of the Stirling-number table
assert all(geometric(n) == geometric_gf_oracle(n) for n in range(12))

# Values at -1/2 give Genocchi numbers: w_n(-1/2) = G_{n+1}/(n+1)
print("Genocchi:", [int(genocchi(n)) for n in range(1, 13)])
print("w_5(-1/2) =", geometric(5)(Fraction(-1, 2)))

# Reflection x -> -1 - x, with the denominator cleared
lhs, rhs = reflect_gp(4)
print("x w_4(-1-x) =", lhs)
print("(x+1) w_4(x) =", rhs)
