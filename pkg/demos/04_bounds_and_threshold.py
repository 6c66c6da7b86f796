"""Where the sandwich bounds start to hold.

The denominator product D(n) = prod (n-j)^(1/(j+1)) is claimed to sit
between 2^(log n) and n^(log n), which squeezes lambda(n) = n!/D(n)
between two Stirling-flavoured envelopes.  Neither claim holds for the
smallest arguments; this script shows the failures at n = 3 and 4, the
all-clear from n = 5, and the scan certifying the whole window up
to 10^4.
"""

import math

from rockers import bounds_check, bounds_check_range, bounds_threshold

print("verdicts near the bottom of the domain:")
print(f"{'n':>4}  {'2^log n':>10}  {'D(n)':>12}  {'n^log n':>12}  "
      f"{'lower':>5}  {'upper':>5}  {'lam lo':>6}  {'lam up':>6}")
for n in range(3, 13):
    v = bounds_check(n)
    print(f"{n:>4}  {math.exp(v.lower_log):>10.3f}  {math.exp(v.denom_log):>12.3f}  "
          f"{math.exp(v.upper_log):>12.3f}  {str(v.lower_holds):>5}  "
          f"{str(v.upper_holds):>5}  {str(v.lambda_lower_holds):>6}  "
          f"{str(v.lambda_upper_holds):>6}")

threshold = bounds_threshold()
print(f"\nall four verdicts hold from n = {threshold} onward "
      f"(scanned through 10^4):")
failures = [v.n for v in bounds_check_range(threshold, 10_000)
            if not (v.lower_holds and v.upper_holds
                    and v.lambda_lower_holds and v.lambda_upper_holds)]
print(f"    failures in [{threshold}, 10^4]: {failures if failures else 'none'}")

print("\nmargins keep widening; at n = 10^4 the denominator sandwich reads")
v = bounds_check(10_000)
print(f"    {v.lower_log:.3f} <= {v.denom_log:.3f} <= {v.upper_log:.3f}  (logs)")
