"""Command-line front end: radius solving, sweeps, catalog, verification.

Exit codes: 0 success, 2 usage/configuration error, 3 solver failure,
4 verification found violations.  All numeric output is printed with 12
significant digits and identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .extremal import QuadratureError
from .radius import (
    BracketError,
    Family,
    Mode,
    RadiusProblem,
    RadiusResult,
    solve,
    solve_janowski_exact,
    sweep,
)
from . import oracle

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SOLVER = 3
EXIT_VIOLATIONS = 4

CSV_HEADER = "psi,family,m,N,mode,r0,rb,residual,iterations,sharp"


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _round12(value):
    """Round floats to 12 significant digits for stable JSON output."""
    if isinstance(value, float):
        return float(_fmt(value))
    if isinstance(value, dict):
        return {k: _round12(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round12(v) for v in value]
    return value


def _emit_json(payload: dict) -> None:
    print(json.dumps(_round12(payload), indent=2))


def _result_csv_row(res: RadiusResult) -> str:
    return ",".join([
        res.psi, res.family, str(res.m), str(res.N), res.mode,
        _fmt(res.r0), _fmt(res.rb), _fmt(res.residual),
        str(res.iterations), str(res.sharp).lower(),
    ])


def _result_table(res: RadiusResult) -> str:
    lines = [
        f"psi        {res.psi}",
        f"family     {res.family}",
        f"m          {res.m}",
        f"N          {res.N}",
        f"mode       {res.mode}",
        f"r0         {_fmt(res.r0)}",
        f"rb         {_fmt(res.rb)}",
        f"residual   {_fmt(res.residual)}",
        f"iterations {res.iterations}",
        f"sharp      {str(res.sharp).lower()}",
    ]
    return "\n".join(lines)


def _print_result(res: RadiusResult, fmt: str) -> None:
    if fmt == "json":
        _emit_json(res.to_json_dict())
    elif fmt == "csv":
        print(CSV_HEADER)
        print(_result_csv_row(res))
    else:
        print(_result_table(res))


def _parse_range(text: str) -> list[int]:
    """``a..b`` inclusive, or a single integer."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        return list(range(lo, hi + 1))
    return [int(text)]


def _family(args, spec) -> Family:
    if args.family is not None:
        return Family(args.family)
    return Family(spec.default_family)


def _mode(args) -> Mode:
    return Mode.BOHR_LIMIT if args.mode == "bohr-limit" else Mode.BOHR_ROGOSINSKI


def _cmd_radius(args) -> int:
    spec = catalog.parse_psi(args.psi)
    problem = RadiusProblem(
        psi=spec, family=_family(args, spec), m=args.m, N=args.N,
        mode=_mode(args), order=args.order, tol=args.tol,
    )
    if args.method == "exact":
        params = spec.params
        if "D" not in params or "E" not in params:
            raise ValueError(f"--method exact needs a Janowski-family psi, got {spec.label}")
        res = solve_janowski_exact(params["D"], params["E"], m=args.m, N=args.N,
                                   tol=args.tol, mode=_mode(args))
    else:
        res = solve(problem)
    _print_result(res, args.format)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    spec = catalog.parse_psi(args.psi)
    n_range = _parse_range(args.N)
    m_range = _parse_range(args.m)
    n_is_range = ".." in args.N
    m_is_range = ".." in args.m
    if n_is_range == m_is_range:
        raise ValueError("sweep needs a range in exactly one of --N and --m (use a..b)")
    if not n_range or not m_range:
        raise ValueError("empty sweep range")
    problem = RadiusProblem(
        psi=spec, family=_family(args, spec), m=m_range[0], N=n_range[0],
        mode=_mode(args), order=args.order, tol=args.tol,
    )
    swept = sweep(problem,
                  n_values=n_range if n_is_range else None,
                  m_values=m_range if m_is_range else None)
    if args.format == "json":
        _emit_json({
            "axis": swept.axis,
            "values": list(swept.values),
            "monotone_nondecreasing": swept.monotone_nondecreasing,
            "results": [res.to_json_dict() for res in swept.results],
        })
    else:
        print(CSV_HEADER)
        for res in swept.results:
            print(_result_csv_row(res))
        if args.format == "table":
            print(f"# {swept.axis} sweep monotone nondecreasing: "
                  f"{str(swept.monotone_nondecreasing).lower()}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    lemma = "weighted" if args.weighted else args.lemma
    psis = [args.psi] if args.psi else list(oracle.DEFAULT_ORACLE_PSIS)
    n_single = args.N if args.N is not None else 1
    if lemma == "tail":
        n_values = (args.N,) if args.N is not None else (1, 2, 3)
        report = oracle.run_tail_suite(psi_labels=psis, trials=args.trials,
                                       seed=args.seed, n_values=n_values,
                                       degree_max=args.degree_max,
                                       order=args.order)
    elif lemma == "bohr-operator":
        report = oracle.run_axiom_suite(trials=args.trials, seed=args.seed)
    elif lemma == "weighted":
        report = oracle.run_weighted_suite(tau=args.tau, trials=args.trials,
                                           seed=args.seed, psi_labels=psis,
                                           N=n_single, degree_max=args.degree_max,
                                           order=args.order)
    elif lemma == "br":
        spec = catalog.parse_psi(psis[0])
        report = oracle.run_br_suite(psi_label=psis[0],
                                     family=Family(args.family or spec.default_family),
                                     m=args.m, N=n_single, trials=args.trials,
                                     seed=args.seed, degree_max=args.degree_max,
                                     order=args.order, mode=_mode(args))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown lemma {lemma!r}")
    _emit_json(report.to_json_dict())
    return EXIT_OK if report.violations == 0 else EXIT_VIOLATIONS


def _cmd_catalog(args) -> int:
    rows = []
    for label in catalog.named_labels() + ["alpha:0.25", "janowski:D=0.5,E=-0.5"]:
        spec = catalog.parse_psi(label)
        rows.append({
            "psi": spec.label,
            "params": spec.params,
            "default_family": spec.default_family,
            "exact_bounds": spec.exact_bounds,
            "koebe_closed": spec.koebe_closed,
            "has_f0_closed": spec.f0_closed is not None,
        })
    if args.format == "json":
        _emit_json({"entries": rows})
    else:
        for row in rows:
            koebe = _fmt(row["koebe_closed"]) if row["koebe_closed"] is not None else "-"
            print(f"{row['psi']:28s} family={row['default_family']:8s} "
                  f"exact_bounds={str(row['exact_bounds']).lower():5s} "
                  f"koebe_starlike={koebe}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bohrad",
        description="Bohr and Bohr-Rogosinski radii for Ma-Minda function classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_mn=True):
        p.add_argument("--psi", default=None, help="catalog label, e.g. cardioid, "
                       "janowski:D=0.5,E=-0.5, alpha:0.25, booth, sine")
        p.add_argument("--family", choices=[f.value for f in Family], default=None,
                       help="starlike or convex (default: the entry's natural family)")
        p.add_argument("--mode", choices=[m.value for m in Mode],
                       default="bohr-rogosinski")
        p.add_argument("--order", type=int, default=64,
                       help="series truncation order (default 64)")
        p.add_argument("--tol", type=float, default=1e-10,
                       help="root bracketing tolerance (default 1e-10)")
        if with_mn:
            p.add_argument("--m", type=int, default=1)
            p.add_argument("--N", type=int, default=1)

    p_radius = sub.add_parser("radius", help="solve one radius equation")
    common(p_radius)
    p_radius.add_argument("--method", choices=["series", "exact"], default="series",
                          help="series path, or the closed Janowski equation")
    p_radius.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p_radius.set_defaults(func=_cmd_radius, needs_psi=True)

    p_sweep = sub.add_parser("sweep", help="solve over a range of N or m")
    common(p_sweep, with_mn=False)
    p_sweep.add_argument("--m", default="1", help="fixed value or range a..b")
    p_sweep.add_argument("--N", default="1", help="fixed value or range a..b")
    p_sweep.add_argument("--format", choices=["table", "csv", "json"], default="csv")
    p_sweep.set_defaults(func=_cmd_sweep, needs_psi=True)

    p_verify = sub.add_parser("verify", help="run a Monte-Carlo verification suite")
    common(p_verify)
    p_verify.add_argument("--lemma", choices=["tail", "bohr-operator", "weighted", "br"],
                          default="tail")
    p_verify.add_argument("--weighted", action="store_true",
                          help="shorthand for --lemma weighted")
    p_verify.add_argument("--tau", type=float, default=0.8)
    p_verify.add_argument("--trials", type=int, default=200)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--degree-max", type=int, default=4, dest="degree_max")
    # For the tail lemma an explicit --N restricts the head-index grid,
    # which otherwise covers N in {1, 2, 3}.
    p_verify.set_defaults(func=_cmd_verify, needs_psi=False, N=None)

    p_catalog = sub.add_parser("catalog", help="list catalog entries")
    p_catalog.add_argument("--format", choices=["table", "json"], default="table")
    p_catalog.set_defaults(func=_cmd_catalog, needs_psi=False)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "needs_psi", False) and not args.psi:
        print("error: --psi is required", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "trials", 1) < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (ValueError, catalog.UnsupportedClosedFormError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BracketError, QuadratureError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
