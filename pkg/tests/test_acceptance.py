"""Acceptance suite: every release gate runs here at its pinned tolerance.

Each test prints one PASS line with its runtime (visible with ``pytest -s``)
and fails loudly if the tolerance or the runtime budget is exceeded.
"""

import csv
import io
import json
import math
import subprocess
import sys
from fractions import Fraction
from time import perf_counter

import gmpy2
import mpmath
import pytest

from rockers.asymptotics import (
    abel_identity_residual,
    index_sum_constant,
    log_lambda_asymptotic,
    psi_closed_form,
    psi_quadrature,
)
from rockers.bounds_and_counts import (
    bounds_check,
    bounds_check_range,
    bounds_threshold,
    denominator_product_log,
    escape_count,
    floor_power,
)
from rockers.core import (
    harmonic_number_float,
    index_product,
    index_sum,
    log_factorial,
    log_lambda,
)

EULER_GAMMA = 0.5772156649015329

# value and one unit in the last printed digit, for n = 1..12
TABLE_REFERENCE = [
    (1.0, 0.5), (2.0, 0.5),
    (4.243, 0.001), (10.998, 0.001), (34.983, 0.001), (134.176, 0.001),
    (608.491, 0.001), (3205.596, 0.001), (19322.113, 0.001),
    (131557.4713, 0.0001), (1000838.66, 0.01), (8428867.597, 0.001),
]


class timer:
    def __init__(self, name, budget):
        self.name = name
        self.budget = budget

    def __enter__(self):
        self.start = perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = perf_counter() - self.start
        if exc_type is None:
            assert elapsed < self.budget, (
                f"{self.name}: {elapsed:.2f}s exceeds {self.budget}s budget")
            print(f"ACCEPTANCE PASS: {self.name} [{elapsed:.2f}s < {self.budget}s]")
        else:
            print(f"ACCEPTANCE FAIL: {self.name} [{elapsed:.2f}s]")
        return False


def _run_cli(argv):
    from contextlib import redirect_stdout

    from rockers.cli import main

    out = io.StringIO()
    with redirect_stdout(out):
        code = main(argv)
    return code, out.getvalue()


def test_golden_table_values():
    with timer("golden-tables", 1.0):
        code, out = _run_cli(["table", "--n-min", "1", "--n-max", "12"])
        assert code == 0
        lines = out.splitlines()[1:]
        assert len(lines) == 12
        for line, (reference, ulp) in zip(lines, TABLE_REFERENCE):
            shown = float(line.split()[1])
            assert abs(shown - reference) <= ulp * 1.0000001, line


def test_dual_formula_identity():
    with timer("dual-formula-identity", 5.0):
        for n in range(3, 2001):
            product_form = log_lambda(n).log
            quotient_form = log_factorial(n).log - denominator_product_log(n)
            assert (abs(product_form - quotient_form)
                    <= 1e-10 * max(1.0, abs(product_form))), n


def test_abel_summation_identity():
    with timer("abel-summation-identity", 5.0):
        # hand case at n = 3: log2/2 = log2/3 + log2/6 exactly
        assert abs(math.log(2) / 2 - (math.log(2) / 3 + math.log(2) / 6)) <= 1e-16
        for n in range(3, 2001):
            full_prefix = math.fsum(math.log(n - j) for j in range(1, n))
            residual = abel_identity_residual(n)
            assert abs(residual) <= 1e-10 * max(1.0, full_prefix), n


def test_psi_closed_form_vs_quadrature():
    with timer("psi-closed-vs-quadrature", 30.0):
        for n in range(3, 301):
            closed = psi_closed_form(n).value
            quad = psi_quadrature(n, 1e-10).value
            assert abs(closed - quad) <= 1e-9, n


def test_asymptotic_convergence():
    with timer("asymptotic-convergence", 10.0):
        errors = {}
        for n in range(16, 2001):
            err = log_lambda(n).log - log_lambda_asymptotic(n)
            assert 0.0 < err <= 2.0 * math.log(n) / n, n
            errors[n] = err
        assert errors[2000] < errors[200] < errors[20]
        spot = math.log(8428867.597) - log_lambda_asymptotic(12)
        assert abs(spot - 0.137) <= 0.002


def test_index_product_telescoping():
    with timer("index-product-telescoping", 1.0):
        # running exact product, one rational multiply per n
        running = Fraction(1)
        for n in range(3, 2001):
            running *= Fraction(n - 2, n - 1)
            assert running == Fraction(1, n - 1), n
            assert Fraction(1) / running + 1 == n, n
        # tie the public operation to the same values at sampled n
        for n in (3, 100, 777, 2000):
            assert index_product(n) == Fraction(1, n - 1)


def test_index_sum_constant_limit():
    with timer("index-sum-constant", 5.0):
        n = 10 ** 6
        constant = index_sum_constant(n)
        assert abs(constant - 1.577216) <= 5e-6
        # the limit forced by the closed form (n-1) - H_{n-1} is 1 + gamma
        assert abs(constant - (1.0 + EULER_GAMMA)) <= 2e-6
        closed = (n - 1) - harmonic_number_float(n - 1)
        assert abs(index_sum(n) - closed) <= 1e-12 * n


def test_sandwich_bounds_from_threshold():
    with timer("sandwich-bounds-threshold", 30.0):
        threshold = bounds_threshold()
        assert threshold == 5
        assert not bounds_check(3).lower_holds
        assert not bounds_check(4).lower_holds
        assert bounds_check(5).lower_holds
        for verdict in bounds_check_range(threshold, 10_000):
            assert verdict.lower_holds, verdict.n
            assert verdict.upper_holds, verdict.n
            assert verdict.lambda_lower_holds, verdict.n
            assert verdict.lambda_upper_holds, verdict.n
        # scalar path concurs at spot checks
        for n in (5, 6, 100, 10_000):
            v = bounds_check(n)
            assert v.lower_holds and v.upper_holds
            assert v.lambda_lower_holds and v.lambda_upper_holds


def _floor_oracle_int(base, p, q):
    # floor(base^(p/q)) is the integer q-th root of base^p
    return int(gmpy2.iroot(gmpy2.mpz(base) ** p, q)[0])


def _floor_oracle_256(base, p, q):
    with mpmath.workdps(256):
        return int(mpmath.floor(mpmath.power(mpmath.mpf(base),
                                             mpmath.mpf(p) / q)))


def test_escape_counts_and_certified_floors():
    with timer("escape-counts-certified-floors", 60.0):
        assert escape_count(3) == 3
        assert escape_count(4) == 4
        assert escape_count(5) == 20
        for n in (3, 4, 5):
            oracle = n
            for k in range(1, n - 1):
                oracle *= _floor_oracle_int(n - k, k, k + 1)
            assert escape_count(n) == oracle
        for base in range(2, 501):
            for k in range(1, 51):
                cert = floor_power(base, Fraction(k, k + 1))
                expected = _floor_oracle_int(base, k, k + 1)
                assert cert.floor == expected, (base, k)
                if not cert.is_exact_power:
                    # fixed-precision floors are only trustworthy off the
                    # exact powers, where a 256-digit value cannot straddle
                    # an integer
                    assert _floor_oracle_256(base, k, k + 1) == expected, (base, k)
        for a in range(1, 21):
            for q in range(2, 9):
                for p in range(1, q):
                    if math.gcd(p, q) != 1:
                        continue
                    cert = floor_power(a ** q, Fraction(p, q))
                    assert cert.is_exact_power
                    assert cert.floor == a ** p


def test_cli_contract():
    with timer("cli-contract", 5.0):
        argv = [sys.executable, "-m", "rockers",
                "asym", "--n-min", "3", "--n-max", "40", "--format", "json"]
        first = subprocess.run(argv, capture_output=True)
        second = subprocess.run(argv, capture_output=True)
        assert first.returncode == 0 and first.stdout
        assert first.stdout == second.stdout

        for command in (["table", "--n-min", "1", "--n-max", "12"],
                        ["bounds", "--n-min", "3", "--n-max", "20"],
                        ["escape", "--n-min", "3", "--n-max", "10"]):
            code, csv_text = _run_cli(command + ["--format", "csv"])
            assert code == 0
            code, json_text = _run_cli(command + ["--format", "json"])
            assert code == 0
            reader = csv.reader(io.StringIO(csv_text))
            header = next(reader)
            csv_rows = list(reader)
            json_rows = json.loads(json_text)["rows"]
            assert len(csv_rows) == len(json_rows)
            for jrow, crow in zip(json_rows, csv_rows):
                assert list(jrow.keys()) == header
                for key, cell in zip(header, crow):
                    value = jrow[key]
                    if isinstance(value, bool):
                        assert cell == ("true" if value else "false")
                    elif isinstance(value, int):
                        assert int(cell) == value
                    elif isinstance(value, float):
                        assert float(cell) == value  # bit-for-bit round trip
                    else:
                        assert cell == value

        code, _ = _run_cli(["table", "--n-min", "9", "--n-max", "3"])
        assert code == 2
        code, _ = _run_cli(["eval", "--n", "0"])
        assert code == 3
        code, _ = _run_cli(["eval", "--n", "3", "--digits", "60",
                            "--precision-bits", "128"])
        assert code == 4
