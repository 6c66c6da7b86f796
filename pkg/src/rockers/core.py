"""Exact evaluation of the rockers function and its index algebra.

The rockers function is the damped factorial

    lambda(n) = 2^((n-2)/(n-1)) * 3^((n-3)/(n-2)) * ... * (n-1)^(1/2) * n

for n >= 3, with the special cases lambda(1) = 1 and lambda(2) = 2.
Iteration k >= 1 contributes the factor n - k raised to the index
k/(k+1), so read by descending base the factor list is

    n^1, (n-1)^(1/2), (n-2)^(2/3), ..., 2^((n-2)/(n-1))

and the base-1 factor is omitted (it is identically 1).

Indices are exact `fractions.Fraction` values and the function itself is
carried as a natural logarithm (:class:`LogValue`), so arguments in the
thousands never overflow.  Decimal digits of lambda(n) are produced on
demand by escalating interval arithmetic, and only digits certified by
the enclosure are ever reported (:func:`lambda_value`).

All functions are pure; evaluating disjoint arguments in parallel needs
no coordination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from mpmath import iv

from ._intervals import (DEFAULT_MAX_BITS, certified_decimal,
                         interval_endpoints, iv_prec)
from .errors import DomainError, PrecisionError

__all__ = [
    "FactorTerm",
    "Decomposition",
    "LogValue",
    "index",
    "factorization",
    "index_product",
    "index_sum",
    "index_sum_closed_form",
    "harmonic_number",
    "harmonic_number_float",
    "log_factorial",
    "log_lambda",
    "lambda_value",
    "lambda_value_fixed",
]

# Exact rational summation of H_m gets slow past this point; the float
# path (error-free fsum) takes over.
_EXACT_HARMONIC_LIMIT = 10_000


def _require(n: int, minimum: int, what: str = "n") -> None:
    if not isinstance(n, int) or n < minimum:
        raise DomainError(f"{what} must be an integer >= {minimum}, got {n!r}")


@dataclass(frozen=True)
class FactorTerm:
    """One factor base**exponent of the defining product, 0 < exponent <= 1."""

    base: int
    exponent: Fraction


@dataclass(frozen=True)
class Decomposition:
    """Factor list of lambda(n) for n >= 3, ordered by descending base.

    Carries n - 1 terms with bases n, n-1, ..., 2; the sum of
    exponent * log(base) over the terms is log lambda(n).
    """

    n: int
    terms: tuple[FactorTerm, ...]


@total_ordering
@dataclass(frozen=True, eq=False)
class LogValue:
    """A strictly positive real carried as its natural logarithm.

    Comparing two LogValues compares the represented values, which is the
    same as comparing the logs.  ``precision_hint`` records the working
    precision in bits behind ``log`` (53 for plain float arithmetic).
    """

    log: float
    precision_hint: int = 53

    @property
    def value(self) -> float:
        """The represented value exp(log); may overflow to inf for large logs."""
        return math.exp(self.log)

    def __eq__(self, other):
        if isinstance(other, LogValue):
            return self.log == other.log
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, LogValue):
            return self.log < other.log
        return NotImplemented

    def __hash__(self):
        return hash(self.log)


def index(k: int) -> Fraction:
    """Index (exponent) carried by the iteration-k factor n - k: exactly k/(k+1)."""
    _require(k, 1, "k")
    return Fraction(k, k + 1)


def factorization(n: int) -> Decomposition:
    """Factor decomposition of lambda(n) by descending base.

    Returns the terms n^1, (n-1)^(1/2), (n-2)^(2/3), ...,
    2^((n-2)/(n-1)) with exact rational exponents.  Defined for n >= 3
    only; lambda(1) and lambda(2) are special cases with no product form.
    """
    _require(n, 3)
    terms = [FactorTerm(n, Fraction(1))]
    terms.extend(FactorTerm(n - k, index(k)) for k in range(1, n - 1))
    return Decomposition(n, tuple(terms))


def index_product(n: int) -> Fraction:
    """Exact product of all indices of lambda(n).

    Multiplies the n - 2 indices k/(k+1) term by term in exact rational
    arithmetic.  The product telescopes to 1/(n-1), equivalently
    1/product + 1 recovers n.
    """
    _require(n, 3)
    prod = Fraction(1)
    for k in range(1, n - 1):
        prod *= Fraction(k, k + 1)
    return prod


def index_sum(n: int) -> float:
    """Sum of all indices of lambda(n): sum_{k=1}^{n-2} k/(k+1).

    Direct float summation with error-free accumulation.  The closed form
    (n-1) - H_{n-1} is available as :func:`index_sum_closed_form`.
    """
    _require(n, 3)
    return math.fsum(k / (k + 1) for k in range(1, n - 1))


def harmonic_number(m: int) -> Fraction:
    """H_m = sum_{i=1}^{m} 1/i as an exact rational."""
    _require(m, 0, "m")
    total = Fraction(0)
    for i in range(1, m + 1):
        total += Fraction(1, i)
    return total


def harmonic_number_float(m: int) -> float:
    """H_m by error-free float summation."""
    _require(m, 0, "m")
    return math.fsum(1.0 / i for i in range(1, m + 1))


def index_sum_closed_form(n: int) -> float:
    """Closed form (n-1) - H_{n-1} of the index sum.

    H is summed exactly for n up to 10^4 and with error-free float
    summation above that.
    """
    _require(n, 3)
    if n <= _EXACT_HARMONIC_LIMIT:
        return float((n - 1) - harmonic_number(n - 1))
    return (n - 1) - harmonic_number_float(n - 1)


def log_factorial(n: int) -> LogValue:
    """log(n!) by direct summation of log m, m = 2..n.

    This is the in-library reference value for n!; no closed
    approximation is used anywhere in it.
    """
    _require(n, 1)
    return LogValue(math.fsum(math.log(m) for m in range(2, n + 1)))


def _log_lambda_terms(n: int):
    # ascending base, so contributions accumulate small to large
    for m in range(2, n):
        yield ((n - m) / (n - m + 1)) * math.log(m)
    yield math.log(n)


def log_lambda(n: int) -> LogValue:
    """log lambda(n).

    Values for n <= 2 are the stored special cases log 1 and log 2.  For
    n >= 3 the factor contributions exponent * log(base) are accumulated
    by ascending base with error-free summation.  The result agrees with
    log n! minus the denominator-product log (see
    :func:`rockers.bounds_and_counts.denominator_product_log`), which the
    test suite checks as an independent formula for the same value.
    """
    _require(n, 1)
    if n == 1:
        return LogValue(0.0)
    if n == 2:
        return LogValue(math.log(2.0))
    return LogValue(math.fsum(_log_lambda_terms(n)))


def _log_lambda_interval(n: int):
    # interval enclosure of log lambda(n) at the current iv precision
    if n == 1:
        return iv.mpf(0)
    if n == 2:
        return iv.log(iv.mpf(2))
    total = iv.mpf(0)
    for m in range(2, n):
        total += (iv.mpf(n - m) / iv.mpf(n - m + 1)) * iv.log(iv.mpf(m))
    return total + iv.log(iv.mpf(n))


def _certified_lambda_string(n: int, *, sig_digits: int | None = None,
                             places: int | None = None,
                             max_bits: int = DEFAULT_MAX_BITS) -> str:
    what = (f"{sig_digits} significant digits" if sig_digits is not None
            else f"{places} decimal places")
    need = sig_digits if sig_digits is not None else places + 20
    bits = min(max(128, 64 + int(3.33 * need)), max_bits)
    while True:
        with iv_prec(bits):
            enclosure = iv.exp(_log_lambda_interval(n))
        lo, hi = interval_endpoints(enclosure)
        rendered = certified_decimal(lo, hi, sig_digits=sig_digits, places=places)
        if rendered is not None:
            return rendered
        if bits >= max_bits:
            raise PrecisionError(
                f"cannot certify {what} of lambda({n}) within {max_bits} bits")
        bits = min(bits * 2, max_bits)


def lambda_value(n: int, significant_digits: int,
                 max_bits: int = DEFAULT_MAX_BITS) -> str:
    """Decimal rendering of lambda(n) with the given significant digits.

    Rounds half-even at the requested digit.  The value is evaluated in
    interval arithmetic, doubling the working precision until both
    endpoints of the enclosure round to the same string, so every digit
    returned is a correct digit.  Raises :class:`PrecisionError` if the
    digits cannot be certified within ``max_bits`` bits.
    """
    _require(n, 1)
    _require(significant_digits, 1, "significant_digits")
    return _certified_lambda_string(n, sig_digits=significant_digits,
                                    max_bits=max_bits)


def lambda_value_fixed(n: int, decimal_places: int,
                       max_bits: int = DEFAULT_MAX_BITS) -> str:
    """Decimal rendering of lambda(n) with a fixed number of decimal places.

    Same certification scheme as :func:`lambda_value`, rounding half-even
    at the requested decimal place instead of a significant digit.
    """
    _require(n, 1)
    _require(decimal_places, 0, "decimal_places")
    return _certified_lambda_string(n, places=decimal_places,
                                    max_bits=max_bits)
