"""
Bernoulli numbers from weighted integrals
=========================================

Integrals of w_n(-x) and hw_n(-x) against 1, (1-x)/x and ln(1-x)/x are
Bernoulli numbers.  Every integral here is exact: monomials are mapped to
their moments, no quadrature is involved.
"""

from geomharm import bernoulli
from geomharm import integrals as ig
from geomharm import number_identities as ni

print(" n   B_n      int w_n(-y)dy   int (1-x)/x hw_{n+1}(-x)dx   closed form")
for n in range(1, 9):
    lhs, _ = ig.int_gp_plain(n)
    geo_lhs, geo_rhs = ig.int_hgp_geomweight(n)
    print(f"{n:2d}  {str(bernoulli(n)):7s}  {str(lhs):14s}  {str(geo_lhs):27s}  {geo_rhs}")

# Products of hw_{n+1} and w_m for even n + m
print("(n, m) -> integral, (-1)^n n/2 B_{n+m}")
for n, m in [(1, 1), (2, 2), (3, 1), (4, 6)]:
    print((n, m), *ig.int_hgp_gp_product(n, m))

# Odd n + m has no known closed form; the exact values are still computable
print("odd parity:", [str(ig.explore_eq13_odd(n, 1)) for n in range(0, 9, 2)])

# The integrals imply explicit Stirling-harmonic formulas
print("sum (-1)^(k-1) S(n,k) (k-1)! H_k = B_{n-1}:", all(a == b for a, b in map(ni.identity_eq18, range(1, 25))))
print("teo8 product of harmonic numbers:", all(a == b for a, b in map(ni.identity_teo8, range(2, 25))))

# The closed form for the (1-x)/x product integral is not symmetric in (n, m):
# at (0, 1) the integral is -1/2 but (-1)^(n+1) B_{n+m} gives +1/2
print("semi-orthogonality at (1,0):", ig.int_semiorth(1, 0), " at (0,1):", ig.int_semiorth(0, 1))
