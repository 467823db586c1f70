"""Command-line entry point ``revlab``.

Times are always given as multiples of 2pi through ``--t-mult``: ``p/q``,
``phi``, ``e`` or a decimal string. Constants are replaced by a convergent of
their continued fraction (``--depth``), decimals by their exact fraction, so
every run uses an exact rational time.

CSV outputs start with ``#`` metadata lines; JSON outputs carry the same
metadata under a ``"metadata"`` key. Exit status: 0 on success, 2 for invalid
input, 3 when a numerical guard refuses the computation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .boxdim import SampledGraph, default_epsilons, fit_dimension
from .contfrac import CONSTANTS, expand
from .errors import NumericalGuardError
from .evolution import DEFAULT_N, evolve_bo, evolve_schrodinger
from .gauss import weyl_scan
from .initial_data import PiecewiseConstant, to_series
from .phase import RationalTime
from .regularity import besov_seminorm, build_bank, top_scale
from .revival import bo_revival, lattice_safe_grid, schrodinger_revival
from .series import TorusGrid, evaluate, evaluate_complex

CANONICAL_IC = "indicator:-1.5707963267948966,1.5707963267948966"
DEFAULT_DEPTH = 16


def resolve_time(text: str, depth: int = DEFAULT_DEPTH) -> tuple[RationalTime, str]:
    """Exact rational time and a description of where it came from."""
    key = text.strip().lower()
    if key in CONSTANTS:
        conv = expand(key, depth)[-1]
        return RationalTime(conv.p, conv.q), f"convergent {conv.p}/{conv.q} of {key} (depth {depth}, gap {conv.gap!r})"
    if "/" in key:
        rt = RationalTime.parse(key)
        return rt, f"rational {rt}"
    try:
        frac = Fraction(key)
    except ValueError:
        raise ValueError(f"cannot parse time multiple {text!r}") from None
    if frac < 0:
        raise ValueError("time multiples must be non-negative")
    return RationalTime(frac.numerator, frac.denominator), f"decimal {text} = {frac}"


def fmt(v: float) -> str:
    """Shortest round-trip decimal."""
    return repr(float(v))


def metadata(subcommand: str, args: argparse.Namespace, **extra) -> dict:
    config = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "out", "threads")}
    meta = {"subcommand": subcommand, "version": __version__, "config": config}
    meta.update(extra)
    return meta


def write_csv(path, meta: dict, header, rows):
    buf = io.StringIO()
    for key, value in meta.items():
        buf.write(f"# {key}: {json.dumps(value, sort_keys=True)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])
    _emit(path, buf.getvalue())


def write_json(path, meta: dict, payload):
    _emit(path, json.dumps({"metadata": meta, "data": payload}, indent=2, sort_keys=True) + "\n")


def _emit(path, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def read_graph(path: str) -> SampledGraph:
    with open(path, newline="") as fh:
        lines = [line for line in fh if not line.startswith("#")]
    reader = csv.reader(lines)
    header = next(reader)
    rows = np.array([[float(v) for v in row[:2]] for row in reader if row])
    if rows.size == 0 or len(header) < 2:
        raise ValueError(f"{path}: expected columns x and a value column")
    return SampledGraph(rows[:, 0], rows[:, 1])


def cmd_solve(args):
    rt, origin = resolve_time(args.t_mult, args.depth)
    u0 = PiecewiseConstant.parse(args.ic)
    series = to_series(u0, args.N)
    grid = TorusGrid.midpoint(args.samples)
    meta = metadata("solve", args, N=args.N, time=origin, seed=None)
    x = grid.nodes
    if args.eq == "bo":
        u = evaluate(evolve_bo(series, rt), grid)
        write_csv(args.out, meta, ["x", "u"], zip(x, u))
    else:
        v = evaluate_complex(evolve_schrodinger(series, rt), grid)
        write_csv(args.out, meta, ["x", "re", "im"], zip(x, v.real, v.imag))


def cmd_revive(args):
    rt = RationalTime(args.p, args.q)
    u0 = PiecewiseConstant.parse(args.ic)
    grid = lattice_safe_grid(args.samples, u0, rt)
    u = bo_revival(u0, rt, grid, threads=args.threads)
    meta = metadata("revive", args, N=None, time=f"rational {rt}", grid_offset=grid.offset, seed=None)
    write_csv(args.out, meta, ["x", "u"], zip(grid.nodes, u))


def cmd_approx(args):
    cf = expand(args.target, args.depth)
    payload = [c.to_dict() for c in cf.convergents]
    meta = metadata("approx", args, partial_quotients=list(cf.partial_quotients))
    write_json(args.out, meta, payload)


def cmd_weyl(args):
    rt, origin = resolve_time(args.t_mult, args.depth)
    bank = build_bank(max(args.jmax, 1))
    res = args.x_resolution or 2 ** (args.jmax + 2)
    report = weyl_scan(rt, args.delta, args.jmin, args.jmax, bank, res)
    meta = metadata("weyl", args, time=origin, x_resolution=res, passed=report.passed,
                    max_ratio=report.max_ratio, seed=None)
    write_csv(args.out, meta, ["j", "S_j", "ratio_j"],
              ((r.j, r.S, r.ratio) for r in report.records))


def cmd_besov(args):
    rt, origin = resolve_time(args.t_mult, args.depth)
    u0 = PiecewiseConstant.parse(args.ic)
    f = evolve_bo(to_series(u0, args.N), rt)
    bank = build_bank(min(16, int(math.log2(args.N)) - 1))
    grid = TorusGrid(4 * 2 ** top_scale(bank, f))
    p = math.inf if args.p == "inf" else 1
    report = besov_seminorm(bank, f, args.alpha, p, grid)
    w = report.weighted
    ratios = np.concatenate([[math.nan], w[1:] / w[:-1]])
    meta = metadata("besov", args, N=args.N, time=origin, sup=report.sup, seed=None)
    write_csv(args.out, meta, ["j", "seminorm", "ratio"], zip(report.scales, w, ratios))


def cmd_dimension(args):
    g = read_graph(args.input)
    eps = default_epsilons(g, args.eps_num)
    window = tuple(float(v) for v in args.fit_window.split(",")) if args.fit_window else None
    fit = fit_dimension(g, eps, fit_window=window, threads=args.threads)
    payload = fit.to_dict()
    payload["eps_policy"].update({"rule": "geometric", "num": args.eps_num,
                                  "min": float(eps.min()), "max": float(eps.max())})
    write_json(args.out, metadata("dimension", args), payload)


def _figure_revival(args, rt: RationalTime, name: str):
    u0 = PiecewiseConstant.parse(args.ic)
    grid = lattice_safe_grid(args.samples, u0, rt)
    u = bo_revival(u0, rt, grid, threads=args.threads)
    fit = fit_dimension(SampledGraph(grid.nodes, u), threads=args.threads)
    meta = metadata(name, args, N=None, time=f"rational {rt}", grid_offset=grid.offset, seed=None)
    os.makedirs(args.out, exist_ok=True)
    write_csv(os.path.join(args.out, f"{name}.csv"), meta, ["x", "u"], zip(grid.nodes, u))
    write_json(os.path.join(args.out, f"{name}_fit.json"), meta, fit.to_dict())
    print(f"{name}: t = 2pi*{rt}, D = {fit.D:.4f}, r2 = {fit.r2:.5f}")


def cmd_figure1(args):
    rt = RationalTime(1, 3)
    u0 = PiecewiseConstant.parse(args.ic)
    grid = lattice_safe_grid(args.samples, u0, rt)
    u = bo_revival(u0, rt, grid)
    v = schrodinger_revival(u0, rt, grid)
    meta = metadata("figure1", args, N=None, time="rational 1/3", grid_offset=grid.offset, seed=None)
    os.makedirs(args.out, exist_ok=True)
    write_csv(os.path.join(args.out, "figure1.csv"), meta, ["x", "u", "re_v", "im_v"],
              zip(grid.nodes, u, v.real, v.imag))


def cmd_figure2(args):
    _figure_revival(args, RationalTime(2584, 1597), "figure2")


def cmd_figure3(args):
    _figure_revival(args, RationalTime(23225, 8544), "figure3")


def cmd_selftest(args):
    from .selftest import run_selftest

    failures = run_selftest(stream=sys.stdout)
    if failures:
        raise NumericalGuardError(f"{failures} self-test check(s) failed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revlab", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int,
                        default=int(os.environ.get("REVLAB_THREADS", "1")),
                        help="worker cap; results do not depend on it")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="truncated spectral solution at any time")
    p.add_argument("--eq", choices=["bo", "schrodinger"], default="bo")
    p.add_argument("--t-mult", required=True)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--N", type=int, default=DEFAULT_N)
    p.add_argument("--ic", default=CANONICAL_IC)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("revive", help="exact Benjamin-Ono revival at 2pi p/q")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ic", default=CANONICAL_IC)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_revive)

    p = sub.add_parser("approx", help="continued-fraction convergents")
    p.add_argument("--target", required=True)
    p.add_argument("--depth", type=int, default=20)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("weyl", help="dyadic Weyl-sum scan")
    p.add_argument("--t-mult", required=True)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--delta", type=float, default=0.1)
    p.add_argument("--jmin", type=int, default=4)
    p.add_argument("--jmax", type=int, default=12)
    p.add_argument("--x-resolution", type=int, default=None)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("besov", help="per-scale Besov seminorms of the evolved datum")
    p.add_argument("--alpha", type=float, default=0.45)
    p.add_argument("--p", choices=["inf", "1"], default="inf")
    p.add_argument("--t-mult", required=True)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--N", type=int, default=DEFAULT_N)
    p.add_argument("--ic", default=CANONICAL_IC)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_besov)

    p = sub.add_parser("dimension", help="box-counting dimension of a sampled graph")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--eps-num", type=int, default=20)
    p.add_argument("--fit-window", default=None, help="lo,hi bounds on eps")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_dimension)

    for name, func, help_ in [("figure1", cmd_figure1, "revival at 2pi/3 with Schrodinger parts"),
                              ("figure2", cmd_figure2, "golden-ratio convergent time and dimension"),
                              ("figure3", cmd_figure3, "e convergent time and dimension")]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--ic", default=CANONICAL_IC)
        p.add_argument("--samples", type=int, default=10_000)
        p.add_argument("--out", default=".")
        p.set_defaults(func=func)

    p = sub.add_parser("selftest", help="quick consistency checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    try:
        args.func(args)
    except NumericalGuardError as exc:
        print(f"revlab: numerical guard: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"revlab: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
