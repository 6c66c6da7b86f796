"""Sandwich bounds for the rockers function and exact floored-product counts.

Writing lambda(n) = n! / D(n) with the denominator product
D(n) = prod_{j=1}^{n-1} (n-j)^(1/(j+1)), the two-sided estimates

    2^(log n)  <=  D(n)  <=  n^(log n)
    n^(n - log n) sqrt(n) sqrt(2 pi) / e^n  <=  lambda(n)
                                            <=  n^n sqrt(n) sqrt(2 pi) / (2^(log n) e^n)

hold from some threshold argument upward.  This module checks all four
verdicts in log space (:func:`bounds_check`) and locates the threshold
empirically by scanning (:func:`bounds_threshold`).

It also computes the escape count

    A(n) = n * prod_{k=1}^{n-2} floor((n-k)^(k/(k+1)))

exactly: every floored factor is a certified integer (an interval
enclosure of the power that contains no integer, or an exact root when
the power is an integer), and the product is arbitrary-precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

from ._intervals import (DEFAULT_MAX_BITS, DEFAULT_START_BITS,
                         interval_endpoints, iv_prec)
from .core import log_lambda
from .errors import DomainError, PrecisionError, ThresholdNotFoundError

__all__ = [
    "BoundsVerdict",
    "FloorCertificate",
    "denominator_product_log",
    "bounds_check",
    "bounds_check_range",
    "bounds_threshold",
    "floor_power",
    "escape_count",
    "escape_ratio",
]

_LOG2 = math.log(2.0)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

DEFAULT_SCAN_LIMIT = 10_000


def _require(n: int, minimum: int, what: str = "n") -> None:
    if not isinstance(n, int) or n < minimum:
        raise DomainError(f"{what} must be an integer >= {minimum}, got {n!r}")


@dataclass(frozen=True)
class BoundsVerdict:
    """Log-space verdicts of the four sandwich inequalities at one n.

    ``denom_log`` is log D(n); ``lower_log`` and ``upper_log`` are the
    logs of 2^(log n) and n^(log n).  The two lambda verdicts compare
    log lambda(n) against the Stirling-based sandwich.
    """

    n: int
    denom_log: float
    lower_log: float
    upper_log: float
    lower_holds: bool
    upper_holds: bool
    lambda_lower_holds: bool
    lambda_upper_holds: bool


@dataclass(frozen=True)
class FloorCertificate:
    """A certified integer floor of base**exponent.

    ``floor <= base**exponent < floor + 1`` is guaranteed: either the
    power is an exact integer (``is_exact_power``, found by integer root
    extraction) or an interval enclosure of the power contained no
    integer.  ``precision_bits_used`` is 0 for the exact case.
    """

    base: int
    exponent: Fraction
    floor: int
    is_exact_power: bool
    precision_bits_used: int


def denominator_product_log(n: int) -> float:
    """log D(n) = sum_{j=1}^{n-1} log(n-j)/(j+1).

    Error-free float summation, iterating terms by ascending magnitude
    (large j first).  The j = n-1 term is log 1 = 0, kept implicitly.
    """
    _require(n, 3)
    return math.fsum(math.log(n - j) / (j + 1) for j in range(n - 1, 0, -1))


def _verdict_from_logs(n: int, denom_log: float, loglam: float) -> BoundsVerdict:
    logn = math.log(n)
    lower_log = _LOG2 * logn
    upper_log = logn * logn
    lam_lower = (n - logn) * logn + 0.5 * logn + _HALF_LOG_2PI - n
    lam_upper = n * logn + 0.5 * logn + _HALF_LOG_2PI - _LOG2 * logn - n
    return BoundsVerdict(
        n=n,
        denom_log=denom_log,
        lower_log=lower_log,
        upper_log=upper_log,
        lower_holds=lower_log <= denom_log,
        upper_holds=denom_log <= upper_log,
        lambda_lower_holds=lam_lower <= loglam,
        lambda_upper_holds=loglam <= lam_upper,
    )


def bounds_check(n: int) -> BoundsVerdict:
    """Evaluate all four sandwich verdicts at n, in log space."""
    _require(n, 3)
    return _verdict_from_logs(n, denominator_product_log(n), log_lambda(n).log)


def _denominator_log_table(n_max: int):
    """Vectorized log D(n) for all 2 <= n <= n_max (index = n).

    D(n) is a discrete convolution of log m against the weights 1/(j+1),
    so the whole table costs one numpy convolution instead of an
    O(n_max^2) scalar scan.  Agreement with the scalar path is part of
    the test suite.
    """
    import numpy as np

    logs = np.zeros(n_max + 1)
    logs[1:] = np.log(np.arange(1, n_max + 1, dtype=float))
    weights = 1.0 / (np.arange(1, n_max, dtype=float) + 1.0)
    conv = np.convolve(weights, logs[1:n_max])
    table = np.zeros(n_max + 1)
    table[2:] = conv[:n_max - 1]
    return logs, table


def bounds_check_range(n_min: int, n_max: int) -> list[BoundsVerdict]:
    """Verdicts for every n in [n_min, n_max], computed vectorized."""
    _require(n_min, 3, "n_min")
    if n_max < n_min:
        raise DomainError(f"empty range: n_min={n_min} > n_max={n_max}")
    logs, denom = _denominator_log_table(n_max)
    logfact = logs.cumsum()
    return [
        _verdict_from_logs(n, float(denom[n]), float(logfact[n] - denom[n]))
        for n in range(n_min, n_max + 1)
    ]


def bounds_threshold(limit: int = DEFAULT_SCAN_LIMIT) -> int:
    """Least n* such that all four verdicts hold for every n in [n*, limit].

    Found by scanning the whole window; raises
    :class:`ThresholdNotFoundError` when the verdicts still fail at the
    top of the window.
    """
    _require(limit, 3, "limit")
    last_fail = None
    for verdict in bounds_check_range(3, limit):
        if not (verdict.lower_holds and verdict.upper_holds
                and verdict.lambda_lower_holds and verdict.lambda_upper_holds):
            last_fail = verdict.n
    if last_fail is None:
        return 3
    if last_fail >= limit:
        raise ThresholdNotFoundError(
            f"bounds still failing at n={last_fail}, the top of the scan window")
    return last_fail + 1


def _integer_root(x: int, k: int) -> int:
    """floor(x ** (1/k)) for nonnegative integer x, by integer Newton steps."""
    if x < 0:
        raise DomainError(f"x must be nonnegative, got {x}")
    _require(k, 1, "k")
    if x in (0, 1) or k == 1:
        return x
    # seed from above so the iteration decreases monotonically to the floor
    r = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        nxt = ((k - 1) * r + x // r ** (k - 1)) // k
        if nxt >= r:
            return r
        r = nxt


def floor_power(base: int, exponent: Fraction,
                start_bits: int = DEFAULT_START_BITS,
                max_bits: int = DEFAULT_MAX_BITS) -> FloorCertificate:
    """Certified floor(base ** exponent) for a rational exponent in (0, 1].

    Exact integer powers are detected first (base = a^q makes the value
    a^p exactly); otherwise the power is evaluated in interval
    arithmetic, doubling the precision from ``start_bits`` until the
    enclosure pins down a single floor, strictly above it for the lower
    endpoint.  Irrational powers always separate from the integers, so
    escalation terminates; :class:`PrecisionError` is raised only if
    ``max_bits`` is exhausted first.
    """
    _require(base, 1, "base")
    exponent = Fraction(exponent)
    if not 0 < exponent <= 1:
        raise DomainError(f"exponent must lie in (0, 1], got {exponent}")
    p, q = exponent.numerator, exponent.denominator
    root = _integer_root(base, q)
    if root ** q == base:
        return FloorCertificate(base, exponent, root ** p, True, 0)
    bits = min(start_bits, max_bits)
    while True:
        with iv_prec(bits):
            power = iv.exp((iv.mpf(p) / iv.mpf(q)) * iv.log(iv.mpf(base)))
        lo, hi = interval_endpoints(power)
        floor_lo = lo.numerator // lo.denominator
        floor_hi = hi.numerator // hi.denominator
        if floor_lo == floor_hi and lo > floor_lo:
            return FloorCertificate(base, exponent, floor_lo, False, bits)
        if bits >= max_bits:
            raise PrecisionError(
                f"cannot certify floor({base}^{exponent}) within {max_bits} bits")
        bits = min(bits * 2, max_bits)


def escape_count(n: int, max_bits: int = DEFAULT_MAX_BITS) -> int:
    """A(n) = n * prod_{k=1}^{n-2} floor((n-k)^(k/(k+1))), exactly.

    Every factor is a certified integer floor; the product is plain
    arbitrary-precision integer arithmetic, accumulated in ascending k.
    """
    _require(n, 3)
    total = 1
    for k in range(1, n - 1):
        total *= floor_power(n - k, Fraction(k, k + 1), max_bits=max_bits).floor
    return total * n


def escape_ratio(n: int) -> float:
    """A(n) / lambda(n), as exp(log A(n) - log lambda(n)).

    Flooring loses a fixed fraction of the first factors (for one,
    floor(2^((n-2)/(n-1))) = 1 for every n >= 3), so this ratio is a
    diagnostic series to examine, not a quantity that tends to 1.
    """
    _require(n, 3)
    return math.exp(math.log(escape_count(n)) - log_lambda(n).log)
