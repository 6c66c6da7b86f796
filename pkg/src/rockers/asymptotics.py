"""Asymptotic form of the rockers function and its supporting identities.

Partial summation turns the exact identity

    log lambda(n) = log n! - sum_{j=1}^{n-1} log(n-j)/(j+1)

into

    log lambda(n) = log n! - S(n-1)/n - Psi(n)

with the prefix sums S(m) = sum_{j=1}^{m} log(n-j) and the integral

    Psi(n) = int_1^{n-1} S(floor(t)) / (t+1)^2 dt.

The integrand is a step function scaled by 1/(t+1)^2, so Psi has an
exact piecewise closed form (:func:`psi_closed_form`); an adaptive
quadrature of the same integral exists purely as an independent check
(:func:`psi_quadrature`).  Substituting the Stirling form of log n!
yields the closed approximation

    log lambda(n) ~ (n - 1/(2n) - 1/2) log n + log(2 pi)/2 - (n + Psi(n) - 1)

whose signed error :func:`asymptotic_report` measures against the exact
value; the error stays positive and decays roughly like log(n)/n.

The index sum satisfies sum_{k=1}^{n-2} k/(k+1) = n - log n - c(n) with
c(n) -> 1 + gamma (Euler-Mascheroni), about 1.5772156649;
:func:`index_sum_constant` returns the measured c(n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds_and_counts import denominator_product_log
from .core import index_sum, log_lambda
from .errors import DomainError, ToleranceError

__all__ = [
    "PsiValue",
    "AsymptoticReport",
    "prefix_log_sum",
    "psi_closed_form",
    "psi_quadrature",
    "abel_identity_residual",
    "log_lambda_asymptotic",
    "index_sum_constant",
    "asymptotic_report",
]

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _require(n: int, minimum: int, what: str = "n") -> None:
    if not isinstance(n, int) or n < minimum:
        raise DomainError(f"{what} must be an integer >= {minimum}, got {n!r}")


@dataclass(frozen=True)
class PsiValue:
    """Psi(n) with its provenance.

    ``abs_error_bound`` is 0 for the closed form (exact up to float
    rounding) and the certified estimate for the quadrature path.
    """

    n: int
    value: float
    method: str  # "closed_form" or "quadrature"
    abs_error_bound: float


@dataclass(frozen=True)
class AsymptoticReport:
    """Exact and asymptotic log lambda at one n, with the signed error."""

    n: int
    log_lambda_exact: float
    log_lambda_asym: float
    psi: float
    log_error: float
    ratio_error: float


def prefix_log_sum(n: int, m: int) -> float:
    """S(m) = sum_{j=1}^{m} log(n-j), the running numerator of the identity.

    Equals log((n-1)!) - log((n-1-m)!); computed by direct summation.
    m = 0 gives the empty sum.
    """
    _require(n, 3)
    if not isinstance(m, int) or not 0 <= m <= n - 1:
        raise DomainError(f"m must be an integer in [0, {n - 1}], got {m!r}")
    return math.fsum(math.log(n - j) for j in range(1, m + 1))


def psi_closed_form(n: int) -> PsiValue:
    """Psi(n) from the exact piecewise form of the integral.

    On [m, m+1) the integrand is S(m)/(t+1)^2, so each unit interval
    contributes S(m) * (1/(m+1) - 1/(m+2)) and

        Psi(n) = sum_{m=1}^{n-2} S(m) * (1/(m+1) - 1/(m+2)).

    This is the production path: exact, O(n), no quadrature error.
    """
    _require(n, 3)
    running = 0.0
    terms = []
    for m in range(1, n - 1):
        running += math.log(n - m)
        terms.append(running * (1.0 / (m + 1) - 1.0 / (m + 2)))
    return PsiValue(n, math.fsum(terms), "closed_form", 0.0)


def psi_quadrature(n: int, tol: float = 1e-10) -> PsiValue:
    """Psi(n) by adaptive quadrature, as an independent cross-check.

    The integrand jumps at the integers and is smooth in between, so each
    unit interval [m, m+1] is integrated separately with the absolute
    error budget split evenly across intervals.  Raises
    :class:`ToleranceError` when the certified error cannot be brought
    under ``tol``.
    """
    from scipy.integrate import quad  # deferred so CLI startup stays light

    _require(n, 3)
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    budget = tol / (n - 2)
    running = 0.0
    values = []
    error_total = 0.0
    for m in range(1, n - 1):
        running += math.log(n - m)
        result = quad(lambda t, c=running: c / ((t + 1.0) * (t + 1.0)),
                      m, m + 1, epsabs=budget, epsrel=1e-13, full_output=1)
        if len(result) > 3:  # quad appended an explanation: not certified
            raise ToleranceError(
                f"quadrature on [{m}, {m + 1}] could not certify {budget:g}: "
                f"{result[3].splitlines()[0]}")
        values.append(result[0])
        error_total += result[1]
    if error_total > tol:
        raise ToleranceError(
            f"certified quadrature error {error_total:g} exceeds tol {tol:g}")
    return PsiValue(n, math.fsum(values), "quadrature", error_total)


def abel_identity_residual(n: int) -> float:
    """Float residual of the partial-summation identity.

    Both sides of

        sum_{j=1}^{n-1} log(n-j)/(j+1) = S(n-1)/n + Psi(n)

    are computed independently; the mathematical residual is zero, so the
    returned value measures accumulated float rounding only.
    """
    _require(n, 3)
    lhs = denominator_product_log(n)
    return lhs - (prefix_log_sum(n, n - 1) / n + psi_closed_form(n).value)


def log_lambda_asymptotic(n: int) -> float:
    """The closed asymptotic approximation of log lambda(n).

    Evaluates (n - 1/(2n) - 1/2) log n + log(2 pi)/2 - (n + Psi(n) - 1)
    with the exact piecewise Psi.  The approximation error is measured by
    :func:`asymptotic_report`, not assumed.
    """
    _require(n, 3)
    psi = psi_closed_form(n).value
    return ((n - 1.0 / (2 * n) - 0.5) * math.log(n)
            + _HALF_LOG_2PI - (n + psi - 1.0))


def index_sum_constant(n: int) -> float:
    """Measured constant c(n) = n - log n - index_sum(n).

    c(n) converges to 1 + gamma, about 1.5772156649, at rate O(1/n); the
    value returned is the measured one at this n.
    """
    _require(n, 3)
    return n - math.log(n) - index_sum(n)


def asymptotic_report(n_min: int, n_max: int, step: int = 1) -> list[AsymptoticReport]:
    """Exact vs asymptotic log lambda over a range, one record per sampled n."""
    _require(n_min, 3, "n_min")
    _require(step, 1, "step")
    if n_max < n_min:
        raise DomainError(f"empty range: n_min={n_min} > n_max={n_max}")
    reports = []
    for n in range(n_min, n_max + 1, step):
        exact = log_lambda(n).log
        psi = psi_closed_form(n).value
        asym = ((n - 1.0 / (2 * n) - 0.5) * math.log(n)
                + _HALF_LOG_2PI - (n + psi - 1.0))
        log_error = exact - asym
        reports.append(AsymptoticReport(
            n=n,
            log_lambda_exact=exact,
            log_lambda_asym=asym,
            psi=psi,
            log_error=log_error,
            ratio_error=math.expm1(log_error),
        ))
    return reports
