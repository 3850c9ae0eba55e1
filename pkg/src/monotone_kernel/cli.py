"""Command-line front end: evaluate library functions and run verification suites.

    monotone-kernel eval <function> <args...>
    monotone-kernel verify [--suite S]... [--grid lo:hi:count:log|lin]
                           [--tol T] [--kmax K] [--format json|csv|text] [--out PATH]

eval prints the value (with its error bound when the function reports one) to
17 significant digits.  verify runs the requested suites (default: all) and
writes one report per suite; exit code 0 iff every suite passed, 1 on any
failure, 2 on configuration errors, and for eval 3 on domain errors.

The environment variable MONOTONE_KERNEL_PRECISION, when set, asserts a floor
on the working precision in mantissa bits.  Evaluation always runs at the
platform's extended precision; a request above what the platform provides is
a configuration error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from datetime import datetime, timezone
from typing import List, Optional

import numpy as np

from . import series, verify
from .polygamma import polygamma, trigamma
from .series import MANTISSA_BITS, N_MAX, DomainError, Real, SeriesValue
from .verify import ALL_SUITES, CheckReport, Grid, run_suite

EVAL_TOL = 1e-15

_EVAL_ARITY = {
    "bessel_i": 2,
    "bessel_kernel": 1,
    "hyper_1f2": 2,
    "exp_tail_h": 2,
    "trigamma": 1,
    "polygamma": 2,
    "h": 1,
    "kernel_w": 1,
    "q": 1,
}


def _fmt(x) -> str:
    """17 significant digits; positional in the mid range, scientific outside."""
    x = Real(x)
    if x == 0:
        return "0"
    if not np.isfinite(x):
        return str(float(x))
    ax = abs(float(x))
    if 1e-4 <= ax < 1e17:
        return np.format_float_positional(x, precision=17, unique=False, fractional=False, trim="-")
    return np.format_float_scientific(x, precision=16, unique=False, trim="-")


def _fmt_series(sv: SeriesValue) -> str:
    if sv.error_bound > 0:
        return "%s ± %s" % (_fmt(sv.value), np.format_float_scientific(sv.error_bound, precision=2, trim="-"))
    return _fmt(sv.value)


def _run_eval(name: str, a: List[float]) -> str:
    if name == "bessel_i":
        return _fmt_series(series.bessel_i(a[0], a[1], EVAL_TOL))
    if name == "bessel_kernel":
        return _fmt_series(series.bessel_kernel(a[0], EVAL_TOL))
    if name == "hyper_1f2":
        return _fmt_series(series.hyper_1f2(a[0], a[1], EVAL_TOL))
    if name == "exp_tail_h":
        return _fmt(series.exp_tail_h(a[0], a[1]))
    if name == "trigamma":
        return _fmt(trigamma(a[0]))
    if name == "polygamma":
        return _fmt(polygamma(a[0], a[1]))
    if name == "h":
        return _fmt(verify.h_value(a[0]))
    if name == "kernel_w":
        return _fmt(verify.kernel_w(a[0]))
    # q
    return " ".join(_fmt(v) for v in series.q_family(a[0]))


def cmd_eval(ns) -> int:
    name = ns.function
    if name not in _EVAL_ARITY:
        print(
            "unknown function %r; choose from %s" % (name, ", ".join(sorted(_EVAL_ARITY))),
            file=sys.stderr,
        )
        return 2
    if len(ns.args) != _EVAL_ARITY[name]:
        print(
            "function %s takes %d argument(s), got %d" % (name, _EVAL_ARITY[name], len(ns.args)),
            file=sys.stderr,
        )
        return 2
    try:
        a = [float(s) for s in ns.args]
    except ValueError:
        print("arguments must be numeric", file=sys.stderr)
        return 2
    try:
        line = _run_eval(name, a)
    except DomainError as exc:
        print("domain error: %s" % exc, file=sys.stderr)
        return 3
    print(line)
    return 0


def _num(x) -> Optional[float]:
    f = float(x)
    return f if math.isfinite(f) else None


def report_to_dict(r: CheckReport, timestamp: str) -> dict:
    return {
        "suite": r.suite_id,
        "tol": float(r.tol),
        "grid": {
            "lo": r.grid.lo,
            "hi": r.grid.hi,
            "count": r.grid.count,
            "spacing": r.grid.spacing,
        },
        "k_max": r.k_max,
        "entries": [
            {"t": _num(e.t), "k": e.k, "lhs": _num(e.lhs), "rhs": _num(e.rhs), "margin": _num(e.margin)}
            for e in r.entries
        ],
        "min_margin": _num(r.min_margin),
        "pass": r.passed,
        "elapsed_seconds": float(r.elapsed_seconds),
        "timestamp": timestamp,
    }


def _csv_cell(v) -> str:
    return "" if v is None else repr(v)


def render_reports(reports: List[CheckReport], fmt: str, timestamp: str) -> str:
    if fmt == "json":
        dicts = [report_to_dict(r, timestamp) for r in reports]
        payload = dicts[0] if len(dicts) == 1 else dicts
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        lines = ["t,k,lhs,rhs,margin"]
        for r in reports:
            lines.append("# suite: %s" % r.suite_id)
            for e in r.entries:
                lines.append(
                    ",".join(
                        (
                            _csv_cell(_num(e.t)),
                            "" if e.k is None else str(e.k),
                            _csv_cell(_num(e.lhs)),
                            _csv_cell(_num(e.rhs)),
                            _csv_cell(_num(e.margin)),
                        )
                    )
                )
        return "\n".join(lines) + "\n"
    # text
    lines = []
    for r in reports:
        mm = float(r.min_margin)
        lines.append(
            "suite %-16s %s  min_margin=%-13.6g entries=%-5d elapsed=%.3fs"
            % (r.suite_id, "PASS" if r.passed else "FAIL", mm, len(r.entries), r.elapsed_seconds)
        )
    ok = all(r.passed for r in reports)
    lines.append("overall: %s" % ("PASS" if ok else "FAIL"))
    return "\n".join(lines) + "\n"


def _parse_grid(spec: str) -> Grid:
    parts = spec.split(":")
    if len(parts) != 4:
        raise DomainError("grid must be lo:hi:count:log|lin")
    lo, hi, count, spacing = parts
    try:
        return Grid(float(lo), float(hi), int(count), spacing)
    except ValueError as exc:
        raise DomainError("bad grid %r: %s" % (spec, exc))


def cmd_verify(ns) -> int:
    suites = ns.suite or list(ALL_SUITES)
    try:
        grid = _parse_grid(ns.grid) if ns.grid else None
        if ns.tol is not None and not (math.isfinite(ns.tol) and ns.tol > 0):
            raise DomainError("tol must be a positive finite real")
        if ns.kmax is not None and not 0 <= ns.kmax <= N_MAX:
            raise DomainError("kmax must lie in [0, %d]" % N_MAX)
        reports = [run_suite(s, grid=grid, tol=ns.tol, k_max=ns.kmax) for s in suites]
    except DomainError as exc:
        print("configuration error: %s" % exc, file=sys.stderr)
        return 2
    timestamp = datetime.now(timezone.utc).isoformat()
    text = render_reports(reports, ns.format, timestamp)
    if ns.out:
        with open(ns.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.passed for r in reports) else 1


def _precision_env_error() -> Optional[str]:
    s = os.environ.get("MONOTONE_KERNEL_PRECISION")
    if s is None or not s.strip():
        return None
    try:
        bits = int(s.strip())
    except ValueError:
        return "MONOTONE_KERNEL_PRECISION must be an integer number of mantissa bits"
    if bits < 1:
        return "MONOTONE_KERNEL_PRECISION must be positive"
    if bits > MANTISSA_BITS:
        return (
            "MONOTONE_KERNEL_PRECISION requests %d mantissa bits but this platform "
            "provides %d" % (bits, MANTISSA_BITS)
        )
    return None


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="monotone-kernel",
        description="Evaluate the special functions of the monotone-kernel library "
        "and run its verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at given arguments")
    p_eval.add_argument("function", help="one of: %s" % ", ".join(sorted(_EVAL_ARITY)))
    p_eval.add_argument("args", nargs="*", help="numeric arguments")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", action="append", choices=ALL_SUITES, help="repeatable; default all")
    p_verify.add_argument("--grid", help="override grid as lo:hi:count:log|lin")
    p_verify.add_argument("--tol", type=float, help="override suite tolerance")
    p_verify.add_argument("--kmax", type=int, help="override derivative/representation order cap")
    p_verify.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p_verify.add_argument("--out", help="write the report to this path instead of stdout")

    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    err = _precision_env_error()
    if err:
        print("configuration error: %s" % err, file=sys.stderr)
        return 2

    if ns.command == "eval":
        return cmd_eval(ns)
    return cmd_verify(ns)


if __name__ == "__main__":
    sys.exit(main())
