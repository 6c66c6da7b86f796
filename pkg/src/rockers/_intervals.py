"""Escalating-precision interval helpers.

Thin glue around ``mpmath.iv``: a precision context manager, exact
conversion of binary interval endpoints to :class:`decimal.Decimal`, and
certified decimal rendering (both endpoints must round to the same
string before any digits are reported).
"""

from __future__ import annotations

from contextlib import contextmanager
from decimal import Decimal, ROUND_CEILING, ROUND_FLOOR, ROUND_HALF_EVEN, localcontext
from fractions import Fraction

from mpmath import iv

DEFAULT_START_BITS = 128
DEFAULT_MAX_BITS = 4096

# Decimal guard digits for the binary-to-decimal conversion; the outward
# rounding below keeps the conversion itself from breaking the enclosure.
_GUARD_DIGITS = 40


@contextmanager
def iv_prec(bits: int):
    """Temporarily set the interval working precision (in bits)."""
    old = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = old


def _raw_to_fraction(raw) -> Fraction:
    """Exact rational value of a raw mpf tuple (dyadic, so lossless)."""
    sign, man, exp, bc = raw
    man = int(man)
    if man == 0:
        if (int(exp), int(bc)) != (0, 0):
            raise ValueError(f"non-finite interval endpoint: {raw!r}")
        return Fraction(0)
    if sign:
        man = -man
    if exp >= 0:
        return Fraction(man * (1 << exp))
    return Fraction(man, 1 << (-exp))


def interval_endpoints(x) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of an iv.mpf value.

    Goes through the raw representation: the ``.a``/``.b`` accessors
    round to the global mp precision (53 bits by default), which would
    silently collapse a high-precision interval.
    """
    lo_raw, hi_raw = x._mpi_
    return _raw_to_fraction(lo_raw), _raw_to_fraction(hi_raw)


def _fraction_to_decimal(f: Fraction, digits: int, rounding: str) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits + _GUARD_DIGITS
        ctx.rounding = rounding
        return Decimal(f.numerator) / Decimal(f.denominator)


def _round_significant(d: Decimal, digits: int) -> Decimal:
    if d == 0:
        return Decimal(0)
    with localcontext() as ctx:
        ctx.prec = digits + _GUARD_DIGITS
        quantum = Decimal(1).scaleb(d.adjusted() - digits + 1)
        r = d.quantize(quantum, rounding=ROUND_HALF_EVEN)
        if r.adjusted() != d.adjusted():
            # carry crossed a power of ten (9.9995 -> 10.00): re-quantize
            quantum = Decimal(1).scaleb(r.adjusted() - digits + 1)
            r = r.quantize(quantum, rounding=ROUND_HALF_EVEN)
        return r


def _round_places(d: Decimal, places: int) -> Decimal:
    quantum = Decimal(1).scaleb(-places)
    with localcontext() as ctx:
        ctx.prec = max(1, d.adjusted() + places) + _GUARD_DIGITS
        return d.quantize(quantum, rounding=ROUND_HALF_EVEN)


def certified_decimal(lo: Fraction, hi: Fraction, *, sig_digits: int | None = None,
                      places: int | None = None) -> str | None:
    """Round both interval endpoints half-even; return the shared string.

    ``lo`` and ``hi`` are exact rational endpoints enclosing the true
    value.  Each is first converted to Decimal with outward rounding, so
    the decimal pair still brackets the true value; rounding is monotone,
    hence if both endpoints round to the same string, that string is the
    correct rounding of the true value.  Returns None when the endpoints
    disagree and the caller must raise precision.
    """
    work = (sig_digits if sig_digits is not None else places + 20) + 20
    d_lo = _fraction_to_decimal(lo, work, ROUND_FLOOR)
    d_hi = _fraction_to_decimal(hi, work, ROUND_CEILING)
    if sig_digits is not None:
        r_lo = _round_significant(d_lo, sig_digits)
        r_hi = _round_significant(d_hi, sig_digits)
    else:
        r_lo = _round_places(d_lo, places)
        r_hi = _round_places(d_hi, places)
    if r_lo == r_hi and format(r_lo, "f") == format(r_hi, "f"):
        return format(r_lo, "f")
    return None
