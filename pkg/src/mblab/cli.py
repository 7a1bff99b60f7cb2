"""Command-line front end.

Subcommands: constant, sweep, extremal, profile, asymptotics, verify.
Exit codes: 0 ok, 1 invalid arguments, 2 solver failure, 3 verification
failure.  The env var MB_LAB_TOL overrides the default tolerance; the
--tol flag wins over the env var.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .continuum import convergence_study, profile_compare
from .eigensolver import extremal_polynomial, sharp_constant
from .exceptions import ConvergenceError
from .jacobi import JacobiWeightParams
from .pencil import build_pencil, dump_banded
from .verification import run_verification

_REPORT_FIELDS = ("n", "alpha", "beta", "lambda_min", "m_n", "predicted", "ratio", "residual")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments by default; this tool
    # reserves 2 for solver failures and uses 1 for bad input.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fmt(x):
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".17g")


def _report_row(report):
    return [
        report.n,
        report.alpha,
        report.beta,
        report.lambda_min,
        report.m_n,
        report.predicted,
        report.ratio,
        report.residual,
    ]


def _report_json(report_values):
    parts = [f'"{k}": {_fmt(v)}' for k, v in zip(_REPORT_FIELDS, report_values)]
    return "{" + ", ".join(parts) + "}"


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _reports_text(rows, fmt):
    if fmt == "csv":
        lines = [",".join(_REPORT_FIELDS)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        if len(rows) == 1:
            return _report_json(rows[0]) + "\n"
        return "[\n" + ",\n".join("  " + _report_json(r) for r in rows) + "\n]\n"
    header = "".join(f"{k:>14}" for k in _REPORT_FIELDS)
    lines = [header]
    for row in rows:
        cells = [str(v) if isinstance(v, int) else format(float(v), ".6g") for v in row]
        lines.append("".join(f"{c:>14}" for c in cells))
    return "\n".join(lines) + "\n"


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _weight_param(text):
    value = float(text)
    if not value > -1.0:
        raise argparse.ArgumentTypeError(f"weight exponents must exceed -1, got {text}")
    return value


def _float_list(text):
    if not text.strip():
        return []
    return [_weight_param(part) for part in text.split(",")]


def _int_list(text):
    if not text.strip():
        return []
    return [_positive_int(part) for part in text.split(",")]


def _n_range(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected START:STOP:STEP")
    start, stop, step = (int(p) for p in parts)
    if start < 1 or stop < start or step < 1:
        raise argparse.ArgumentTypeError(f"bad range {text}")
    return list(range(start, stop + 1, step))


def _default_tol():
    env = os.environ.get("MB_LAB_TOL")
    if env:
        try:
            return float(env)
        except ValueError:
            pass
    return 1e-12


def _add_common(sub, needs_n=True):
    sub.add_argument("--alpha", type=_weight_param, required=True)
    sub.add_argument("--beta", type=_weight_param, required=True)
    if needs_n:
        sub.add_argument("--n", type=_positive_int, required=True)
    sub.add_argument("--tol", type=float, default=None)
    sub.add_argument("--format", choices=("table", "csv", "json"), default="table")
    sub.add_argument("--output", default=None)


def build_parser():
    parser = _Parser(prog="mblab", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    constant = subs.add_parser("constant", help="sharp constant for one (alpha, beta, n)")
    _add_common(constant)
    constant.add_argument(
        "--dump-pencil", default=None, help="write the banded A, D to this path"
    )

    sweep = subs.add_parser("sweep", help="grid of constants as CSV/JSON")
    sweep.add_argument("--alpha", type=_float_list, required=True, help="comma list")
    sweep.add_argument("--beta", type=_float_list, required=True, help="comma list")
    sweep.add_argument("--n", type=_int_list, default=[], help="comma list of degrees")
    sweep.add_argument("--n-range", type=_n_range, default=[], help="START:STOP:STEP")
    sweep.add_argument("--tol", type=float, default=None)
    sweep.add_argument("--format", choices=("table", "csv", "json"), default="csv")
    sweep.add_argument("--output", default=None)
    sweep.add_argument("--parallel", type=_positive_int, default=os.cpu_count() or 1)

    extremal = subs.add_parser("extremal", help="coefficients of the extremal polynomial")
    _add_common(extremal)

    profile = subs.add_parser(
        "profile", help="eigenvector bundle vs closed-form profile data"
    )
    _add_common(profile)
    profile.set_defaults(output=None)

    asym = subs.add_parser("asymptotics", help="convergence study over a degree list")
    _add_common(asym, needs_n=False)
    asym.add_argument("--n-list", type=_int_list, required=True, help="ascending comma list")

    verify = subs.add_parser("verify", help="run the cross-module checks")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument(
        "--perturb",
        type=float,
        default=0.0,
        help="scale one band of A by (1+eps); residual checks should fail",
    )

    return parser


def _cmd_constant(args):
    params = JacobiWeightParams(args.alpha, args.beta)
    tol = args.tol if args.tol is not None else _default_tol()
    report = sharp_constant(params, args.n, tol)
    if args.dump_pencil:
        with open(args.dump_pencil, "w", encoding="utf-8") as fh:
            dump_banded(build_pencil(params, args.n), fh)
    _emit(_reports_text([_report_row(report)], args.format), args.output)
    return 0


def _sweep_task(task):
    alpha, beta, n, tol = task
    report = sharp_constant(JacobiWeightParams(alpha, beta), n, tol)
    return _report_row(report)


def _cmd_sweep(args):
    tol = args.tol if args.tol is not None else _default_tol()
    ns = sorted(set(args.n) | set(args.n_range))
    tasks = [(a, b, n, tol) for a in sorted(set(args.alpha)) for b in sorted(set(args.beta)) for n in ns]
    rows = {}
    failed = False
    if args.parallel > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            for task, outcome in zip(tasks, pool.map(_sweep_wrapped, tasks)):
                rows[task] = outcome
    else:
        for task in tasks:
            rows[task] = _sweep_wrapped(task)
    out_rows = []
    for task in tasks:
        row = rows[task]
        if row is None:
            failed = True
            a, b, n, _ = task
            row = [n, a, b, float("nan"), float("nan"), float("nan"), float("nan"), float("nan")]
        out_rows.append(row)
    _emit(_reports_text(out_rows, args.format), args.output)
    return 2 if failed else 0


def _sweep_wrapped(task):
    try:
        return _sweep_task(task)
    except (ConvergenceError, OverflowError):
        return None


def _cmd_extremal(args):
    params = JacobiWeightParams(args.alpha, args.beta)
    tol = args.tol if args.tol is not None else _default_tol()
    u, v, m_n = extremal_polynomial(params, args.n, tol)
    if args.format == "json":
        body = ", ".join(
            [
                f'"n": {args.n}',
                f'"alpha": {_fmt(args.alpha)}',
                f'"beta": {_fmt(args.beta)}',
                f'"m_n": {_fmt(m_n)}',
                '"u": [' + ", ".join(_fmt(x) for x in u) + "]",
                '"v": [' + ", ".join(_fmt(x) for x in v) + "]",
            ]
        )
        _emit("{" + body + "}\n", args.output)
    else:
        sep = "," if args.format == "csv" else " "
        lines = [sep.join(("k", "u", "v"))]
        for k in range(args.n):
            lines.append(sep.join((str(k), _fmt(u[k]), _fmt(v[k]))))
        lines.append(sep.join(("# m_n", _fmt(m_n), "")) if args.format == "csv" else f"m_n {_fmt(m_n)}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_profile(args):
    params = JacobiWeightParams(args.alpha, args.beta)
    tol = args.tol if args.tol is not None else _default_tol()
    comparison = profile_compare(params, args.n, tol)
    prefix = args.output or f"profile_a{args.alpha:g}_b{args.beta:g}_n{args.n}"
    for suffix, series in (
        ("discrete", comparison.discrete),
        ("closedform", comparison.closed_form),
    ):
        path = f"{prefix}.{suffix}.tsv"
        with open(path, "w", encoding="utf-8") as fh:
            for t, value in zip(comparison.t, series):
                fh.write(f"{_fmt(t)} {_fmt(value)}\n")
    print(
        f"branch={comparison.branch} degenerate={comparison.degenerate} "
        f"l_star={_fmt(comparison.l_star)} sup_defect={_fmt(comparison.sup_defect)} "
        f"files={prefix}.discrete.tsv,{prefix}.closedform.tsv"
    )
    return 0


def _cmd_asymptotics(args):
    params = JacobiWeightParams(args.alpha, args.beta)
    tol = args.tol if args.tol is not None else _default_tol()
    if not args.n_list:
        print("error: --n-list is empty", file=sys.stderr)
        return 1
    reports = convergence_study(params, args.n_list, tol)
    _emit(_reports_text([_report_row(r) for r in reports], args.format), args.output)
    return 0


def _cmd_verify(args):
    results = run_verification(seed=args.seed, perturb=args.perturb)
    ok = True
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        ok = ok and res.passed
        print(f"{status} {res.name}: {res.detail}")
    print("verification " + ("passed" if ok else "FAILED"))
    return 0 if ok else 3


_COMMANDS = {
    "constant": _cmd_constant,
    "sweep": _cmd_sweep,
    "extremal": _cmd_extremal,
    "profile": _cmd_profile,
    "asymptotics": _cmd_asymptotics,
    "verify": _cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConvergenceError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return 2


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
