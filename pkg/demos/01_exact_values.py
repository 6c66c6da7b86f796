"""First contact with the rockers function.

lambda(n) multiplies the bases n, n-1, ..., 2, but damps every base
below n by the exponent k/(k+1) (k counts down from the top), so it
grows far slower than n!.  This script prints the factor view, the
first twelve values, and the exact identity connecting both evaluation
routes.
"""

import math

from rockers import (
    denominator_product_log,
    factorization,
    lambda_value,
    log_factorial,
    log_lambda,
)

print("factor view of lambda(6):")
for term in factorization(6).terms:
    print(f"    {term.base}^({term.exponent})")

print("\nfirst twelve values (10 certified significant digits):")
print(f"{'n':>3}  {'lambda(n)':>16}  {'n!':>12}")
for n in range(1, 13):
    print(f"{n:>3}  {lambda_value(n, 10):>16}  {math.factorial(n):>12}")

print("\nthe same number two ways: product form vs n! / denominator product")
print(f"{'n':>5}  {'product form':>18}  {'quotient form':>18}")
for n in (3, 12, 100, 1000):
    product_form = log_lambda(n).log
    quotient_form = log_factorial(n).log - denominator_product_log(n)
    print(f"{n:>5}  {product_form:>18.12f}  {quotient_form:>18.12f}")
print("(log-domain agreement is part of the test suite, to 1e-10 relative)")
