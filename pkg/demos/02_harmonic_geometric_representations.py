"""
Five ways to build harmonic geometric polynomials
=================================================

hw_n(x) = sum_k S(n,k) k! H_k x^k can be written through ordinary geometric
polynomials in several ways.  This script builds each one and compares.
"""

import time

from geomharm import harmonic_geometric as hg

print("hw_0..hw_4:")
for n in range(5):
    print(f"  {hg.hgp(n)}")

builders = {
    "definition": hg.hgp,
    "generating function": hg.hgp_gf_oracle,
    "convolution of w's": hg.hgp_via_theorem4,
    "triple sum with (x/(1+x))^k": hg.hgp_via_theorem5,
    "derivatives of w_n": hg.hgp_via_eq14,
    "shifted convolution": lambda n: hg.hgp_via_pro2(n - 1),
}

n = 12
reference = hg.hgp(n)
for name, build in builders.items():
    t0 = time.perf_counter()
    poly = build(n)
    dt = time.perf_counter() - t0
    print(f"{name:30s} agrees={poly == reference}  {dt * 1e3:7.1f} ms")

# Recurrences come back as (lhs, rhs) pairs
for relation in (hg.reflect_hgp, hg.convolution_eq8, hg.raising_tf):
    lhs, rhs = relation(6)
    print(f"{relation.__name__}(6) holds: {lhs == rhs}")
