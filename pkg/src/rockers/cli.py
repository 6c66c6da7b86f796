"""Command line for the rockers library.

Subcommands
-----------
eval      lambda(n) with certified decimal digits
table     lambda(n) over a range of n
asym      exact vs asymptotic log lambda, with Psi and the log error
indices   exact index product, recovered argument, index sum and constant
bounds    sandwich-bound verdicts and the threshold for the range
escape    exact escape counts A(n) and the ratio A(n)/lambda(n)

Every subcommand accepts ``--format {table,csv,json}``, ``--digits``,
``--precision-bits`` and ``--out PATH``.  The table view rounds for
humans; csv and json carry full shortest-round-trip floats and re-parse
bit for bit.  Exit codes: 0 ok, 2 usage error, 3 domain error,
4 precision error.  Repeated invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import asymptotics, bounds_and_counts, core
from .errors import DomainError, UsageError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_PRECISION = 4

_FORMATS = ("table", "csv", "json")


def _text_cell(value, float_format=None) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, float_format) if float_format else repr(value)
    return str(value)


def _render_table(rows, float_formats) -> str:
    if not rows:
        return ""
    cols = list(rows[0].keys())
    grid = [cols]
    for row in rows:
        grid.append([_text_cell(row[c], float_formats.get(c, ".10g")) for c in cols])
    widths = [max(len(line[i]) for line in grid) for i in range(len(cols))]
    return "".join(
        "  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip() + "\n"
        for line in grid
    )


def _render_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(rows[0].keys())
    for row in rows:
        writer.writerow([_text_cell(v) for v in row.values()])
    return buf.getvalue()


def _render_json(command, params, rows, extra) -> str:
    def jsonable(v):
        return str(v) if isinstance(v, Fraction) else v

    payload = {
        "command": command,
        "params": params,
        "rows": [{k: jsonable(v) for k, v in row.items()} for row in rows],
    }
    if extra:
        payload.update(extra)
    return json.dumps(payload, indent=2) + "\n"


def _check_range(n_min: int, n_max: int) -> None:
    if n_max < n_min:
        raise UsageError(f"inverted range: n_min={n_min} > n_max={n_max}")


def _lambda_display(n: int, digits, precision_bits: int) -> str:
    if digits is not None:
        return core.lambda_value(n, digits, max_bits=precision_bits)
    if n <= 2:
        return str(n)  # exact special cases print as integers
    # default view: 3 decimal places, 4 once values reach six figures
    places = 3 if core.log_lambda(n).log < 5 * math.log(10) else 4
    return core.lambda_value_fixed(n, places, max_bits=precision_bits)


def _cmd_eval(args):
    digits = args.digits if args.digits is not None else 10
    row = {
        "n": args.n,
        "lambda": core.lambda_value(args.n, digits, max_bits=args.precision_bits),
        "log_lambda": core.log_lambda(args.n).log,
    }
    params = {"n": args.n, "digits": digits, "precision_bits": args.precision_bits}
    return [row], params, None, {"log_lambda": ".12g"}


def _cmd_table(args):
    if args.n_min < 1:
        raise DomainError(f"n_min must be >= 1, got {args.n_min}")
    _check_range(args.n_min, args.n_max)
    rows = [
        {
            "n": n,
            "lambda": _lambda_display(n, args.digits, args.precision_bits),
            "log_lambda": core.log_lambda(n).log,
        }
        for n in range(args.n_min, args.n_max + 1)
    ]
    params = {"n_min": args.n_min, "n_max": args.n_max, "digits": args.digits,
              "precision_bits": args.precision_bits}
    return rows, params, None, {"log_lambda": ".12g"}


def _cmd_asym(args):
    _check_range(args.n_min, args.n_max)
    reports = asymptotics.asymptotic_report(args.n_min, args.n_max, args.step)
    rows = [
        {
            "n": r.n,
            "log_lambda_exact": r.log_lambda_exact,
            "log_lambda_asym": r.log_lambda_asym,
            "psi": r.psi,
            "log_error": r.log_error,
            "ratio_error": r.ratio_error,
        }
        for r in reports
    ]
    params = {"n_min": args.n_min, "n_max": args.n_max, "step": args.step}
    return rows, params, None, {}


def _cmd_indices(args):
    product = core.index_product(args.n)
    recovered = Fraction(1) / product + 1
    row = {
        "n": args.n,
        "index_product": product,
        "argument_recovered": int(recovered),
        "index_sum": core.index_sum(args.n),
        "index_sum_constant": asymptotics.index_sum_constant(args.n),
    }
    return [row], {"n": args.n}, None, {}


def _cmd_bounds(args):
    _check_range(args.n_min, args.n_max)
    verdicts = bounds_and_counts.bounds_check_range(args.n_min, args.n_max)
    rows = [
        {
            "n": v.n,
            "denom_log": v.denom_log,
            "lower_log": v.lower_log,
            "upper_log": v.upper_log,
            "lower_holds": v.lower_holds,
            "upper_holds": v.upper_holds,
            "lambda_lower_holds": v.lambda_lower_holds,
            "lambda_upper_holds": v.lambda_upper_holds,
        }
        for v in verdicts
    ]
    last_fail = None
    for v in verdicts:
        if not (v.lower_holds and v.upper_holds
                and v.lambda_lower_holds and v.lambda_upper_holds):
            last_fail = v.n
    if last_fail is None:
        threshold = args.n_min
    elif last_fail >= args.n_max:
        threshold = None  # verdicts still failing at the top of the range
    else:
        threshold = last_fail + 1
    params = {"n_min": args.n_min, "n_max": args.n_max}
    floats = {"denom_log": ".6f", "lower_log": ".6f", "upper_log": ".6f"}
    return rows, params, {"threshold": threshold}, floats


def _cmd_escape(args):
    _check_range(args.n_min, args.n_max)
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        count = bounds_and_counts.escape_count(n, max_bits=args.precision_bits)
        ratio = math.exp(math.log(count) - core.log_lambda(n).log)
        rows.append({"n": n, "escape_count": count, "escape_ratio": ratio})
    params = {"n_min": args.n_min, "n_max": args.n_max,
              "precision_bits": args.precision_bits}
    return rows, params, None, {"escape_ratio": ".6f"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rockers",
        description="Exact and asymptotic evaluation of the rockers function.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=_FORMATS, default="table",
                        help="output format (default: table)")
    shared.add_argument("--digits", type=int, default=None,
                        help="significant digits for lambda values")
    shared.add_argument("--precision-bits", dest="precision_bits", type=int,
                        default=4096,
                        help="precision ceiling in bits for certified digits and floors")
    shared.add_argument("--out", default=None, metavar="PATH",
                        help="write output to PATH instead of stdout")

    p = sub.add_parser("eval", parents=[shared],
                       help="lambda(n) with certified digits")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("table", parents=[shared],
                       help="lambda(n) over a range of n")
    p.add_argument("--n-min", dest="n_min", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("asym", parents=[shared],
                       help="exact vs asymptotic log lambda")
    p.add_argument("--n-min", dest="n_min", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.set_defaults(func=_cmd_asym)

    p = sub.add_parser("indices", parents=[shared],
                       help="index product, recovered argument, index sum")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_indices)

    p = sub.add_parser("bounds", parents=[shared],
                       help="sandwich-bound verdicts over a range")
    p.add_argument("--n-min", dest="n_min", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("escape", parents=[shared],
                       help="exact escape counts A(n)")
    p.add_argument("--n-min", dest="n_min", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.set_defaults(func=_cmd_escape)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already reported usage problems
        code = exc.code
        if code is None:
            return EXIT_OK
        return code if isinstance(code, int) else EXIT_USAGE

    try:
        rows, params, extra, float_formats = args.func(args)
    except UsageError as exc:
        print(f"rockers: error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"rockers: error: domain: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ArithmeticError as exc:  # precision, tolerance, threshold failures
        print(f"rockers: error: precision: {exc}", file=sys.stderr)
        return EXIT_PRECISION

    if args.format == "json":
        text = _render_json(args.command, params, rows, extra)
    elif args.format == "csv":
        text = _render_csv(rows)
    else:
        text = _render_table(rows, float_formats)
        if extra and "threshold" in extra:
            text += f"threshold: {extra['threshold']}\n"

    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK
