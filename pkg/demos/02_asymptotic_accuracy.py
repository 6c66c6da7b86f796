"""How good is the closed asymptotic form of log lambda(n)?

The approximation

    log lambda(n) ~ (n - 1/(2n) - 1/2) log n + log(2 pi)/2 - (n + Psi(n) - 1)

rests on the integral Psi(n), which has an exact piecewise form (the
integrand is a step function over unit intervals).  This script shows
that the quadrature evaluation of Psi agrees with the closed form, then
tracks the signed log error of the asymptotic formula: it peaks near
n = 6 and decays like log(n)/n afterwards, never changing sign.
"""

import math

from rockers import asymptotic_report, psi_closed_form, psi_quadrature

print("Psi(n): exact piecewise form vs adaptive quadrature")
print(f"{'n':>5}  {'closed form':>16}  {'quadrature':>16}  {'difference':>10}")
for n in (3, 4, 12, 50, 200):
    closed = psi_closed_form(n).value
    quad = psi_quadrature(n, 1e-10).value
    print(f"{n:>5}  {closed:>16.12f}  {quad:>16.12f}  {closed - quad:>10.1e}")

print("\nsigned error of the asymptotic formula (exact minus approximate)")
print(f"{'n':>5}  {'log lambda':>14}  {'asymptotic':>14}  "
      f"{'log error':>11}  {'2 log(n)/n':>11}")
for report in asymptotic_report(4, 2048, 1):
    if report.n & (report.n - 1):  # powers of two only, for a readable table
        continue
    envelope = 2 * math.log(report.n) / report.n
    print(f"{report.n:>5}  {report.log_lambda_exact:>14.6f}  "
          f"{report.log_lambda_asym:>14.6f}  {report.log_error:>11.6f}  "
          f"{envelope:>11.6f}")

print("\nthe error stays inside (0, 2 log(n)/n] from n = 16 on; the ratio")
print("lambda_exact/lambda_asym therefore tends to 1 from above.")
