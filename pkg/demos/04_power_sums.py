"""
Power sums with harmonic weights
================================

sum_n H_n n^m x^n lives in the field a + b ln(1-x).  The finite sum up to p
is the infinite series minus a closed-form tail; the ln(1-x) parts cancel
exactly and the result is rational.
"""

import time
from fractions import Fraction

from geomharm.series_eval import A_fin, A_inf, direct_sum, hA_fin, hA_inf, hA_tail

x = Fraction(1, 3)
print("sum n^3 x^n      =", A_inf(3, x))
print("sum H_n n^2 x^n  =", hA_inf(2, x), "=", float(hA_inf(2, x)))
print("tail beyond p=5  =", hA_tail(2, 5, x))
print("sum_{n<=5}       =", hA_fin(2, 5, x), "(direct:", direct_sum(2, 5, x, with_harmonic=True), ")")

# Closed form versus term-by-term summation
print(f"{'p':>6} {'closed A':>10} {'direct A':>10} {'closed hA':>10} {'direct hA':>10}")
for p in (100, 1000, 4000):
    row = []
    for fn in (
        lambda: A_fin(4, p, x),
        lambda: direct_sum(4, p, x),
        lambda: hA_fin(4, p, x),
        lambda: direct_sum(4, p, x, with_harmonic=True),
    ):
        t0 = time.perf_counter()
        fn()
        row.append(time.perf_counter() - t0)
    print(f"{p:>6} " + " ".join(f"{t:10.4f}" for t in row))
