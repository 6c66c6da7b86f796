"""rockers: exact and asymptotic evaluation of the rockers function.

The rockers function lambda(n) is the damped factorial whose k-th
iteration factor n - k carries the exponent k/(k+1):

    lambda(n) = 2^((n-2)/(n-1)) * 3^((n-3)/(n-2)) * ... * (n-1)^(1/2) * n

with lambda(1) = 1 and lambda(2) = 2.  The package evaluates it exactly
in log space, certifies decimal digits by interval arithmetic, validates
the closed asymptotic approximation built on the integral Psi(n),
verifies the exact index identities and the sandwich bounds, and counts
the floored-product escapes A(n) exactly.
"""

from .core import (
    Decomposition,
    FactorTerm,
    LogValue,
    factorization,
    harmonic_number,
    harmonic_number_float,
    index,
    index_product,
    index_sum,
    index_sum_closed_form,
    lambda_value,
    lambda_value_fixed,
    log_factorial,
    log_lambda,
)
from .asymptotics import (
    AsymptoticReport,
    PsiValue,
    abel_identity_residual,
    asymptotic_report,
    index_sum_constant,
    log_lambda_asymptotic,
    prefix_log_sum,
    psi_closed_form,
    psi_quadrature,
)
from .bounds_and_counts import (
    BoundsVerdict,
    FloorCertificate,
    bounds_check,
    bounds_check_range,
    bounds_threshold,
    denominator_product_log,
    escape_count,
    escape_ratio,
    floor_power,
)
from .errors import (
    DomainError,
    PrecisionError,
    ThresholdNotFoundError,
    ToleranceError,
    UsageError,
)

__version__ = "0.1.0"

__all__ = [
    "Decomposition",
    "FactorTerm",
    "LogValue",
    "factorization",
    "harmonic_number",
    "harmonic_number_float",
    "index",
    "index_product",
    "index_sum",
    "index_sum_closed_form",
    "lambda_value",
    "lambda_value_fixed",
    "log_factorial",
    "log_lambda",
    "AsymptoticReport",
    "PsiValue",
    "abel_identity_residual",
    "asymptotic_report",
    "index_sum_constant",
    "log_lambda_asymptotic",
    "prefix_log_sum",
    "psi_closed_form",
    "psi_quadrature",
    "BoundsVerdict",
    "FloorCertificate",
    "bounds_check",
    "bounds_check_range",
    "bounds_threshold",
    "denominator_product_log",
    "escape_count",
    "escape_ratio",
    "floor_power",
    "DomainError",
    "PrecisionError",
    "ThresholdNotFoundError",
    "ToleranceError",
    "UsageError",
    "__version__",
]
