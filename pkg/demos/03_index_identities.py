"""The index algebra: an exact telescope and a harmonic constant.

Each factor n - k of lambda(n) carries the index k/(k+1).  Multiplying
all indices telescopes exactly to 1/(n-1), so the argument n can be
recovered from the index product alone.  Summing them instead gives
n - log n - c(n) with c(n) -> 1 + gamma; the script shows the measured
c(n) marching to that limit.
"""

import math
from fractions import Fraction

from rockers import index_product, index_sum, index_sum_constant

EULER_GAMMA = 0.5772156649015329

print("index products (exact rationals) and the recovered argument:")
print(f"{'n':>6}  {'product':>9}  {'1/product + 1':>13}")
for n in (3, 5, 12, 100, 2000):
    product = index_product(n)
    recovered = Fraction(1) / product + 1
    print(f"{n:>6}  {str(product):>9}  {int(recovered):>13}")

print("\nindex sums and the constant c(n) = n - log n - sum:")
print(f"{'n':>9}  {'index sum':>16}  {'c(n)':>12}  {'c(n) - (1+gamma)':>17}")
for n in (10, 100, 1000, 10_000, 100_000, 1_000_000):
    total = index_sum(n)
    constant = index_sum_constant(n)
    print(f"{n:>9}  {total:>16.6f}  {constant:>12.9f}  "
          f"{constant - (1 + EULER_GAMMA):>17.2e}")

print(f"\n1 + gamma = {1 + EULER_GAMMA:.9f}; the gap shrinks like 1/(2n),")
print("as the closed form (n-1) - H_(n-1) of the sum predicts.")
assert abs(index_sum_constant(10 ** 6) - (1 + EULER_GAMMA)) < 2e-6
