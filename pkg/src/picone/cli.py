"""Command-line front end.

Exit codes: 0 success, 1 a mathematical violation was found, 2 usage or
parameter error.  All floating-point output round-trips exactly (repr
serialization), so artifacts are usable as regression baselines.
"""

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import inequality, pqsolve, region, spectrum
from .errors import PiconeError
from .inequality import ExponentPair, SamplerConfig
from .profiles import Geometry


def _out_path(arg, default_name):
    if arg is not None:
        return Path(arg)
    outdir = os.environ.get("PICONE_OUTDIR")
    if outdir:
        return Path(outdir) / default_name
    return None


def _emit(text, path):
    if path is None:
        print(text)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n")
        print(f"wrote {path}")


def _geometry(args) -> Geometry:
    if args.ball is not None:
        return Geometry.ball(args.ball, args.radius)
    return Geometry.interval(args.interval)


def cmd_verify(args) -> int:
    cfg = SamplerConfig(
        inequality=args.ineq,
        n_samples=args.n,
        p=args.p,
        q=args.q,
        dim=args.dim,
        regime=args.regime,
        alpha=args.alpha,
        beta=args.beta,
    )
    summary = inequality.fuzz(cfg, seed=args.seed)
    _emit(summary.to_json(), _out_path(args.out, "verify.json"))
    return 1 if summary.violations > 0 else 0


def cmd_region(args) -> int:
    if args.region_cmd == "qtilde":
        print(repr(region.q_tilde()))
        return 0
    if args.region_cmd == "ptilde":
        print(repr(region.p_tilde(args.q)))
        return 0
    if args.region_cmd == "gap":
        rep = region.gap_report(args.q)
        _emit(rep.to_json(), _out_path(args.out, "gap.json"))
        return 0
    if args.region_cmd == "grid":
        samples = region.region_grid(
            (args.pmin, args.pmax), (args.qmin, args.qmax), args.res
        )
        path = _out_path(args.out, "region_grid.csv") or Path("region_grid.csv")
        region.write_grid_csv(samples, path)
        print(f"wrote {path}")
        return 0
    if args.region_cmd == "counterexample":
        cex = region.counterexample(args.p, args.q, dim=args.dim)
        _emit(cex.to_json(), _out_path(args.out, "counterexample.json"))
        return 0
    raise PiconeError(f"unknown region subcommand {args.region_cmd!r}")


def cmd_spectrum(args) -> int:
    geom = _geometry(args)
    prof = spectrum.first_eigenpair(args.r, geom)
    _emit(prof.eigendata_json(), _out_path(args.out, "eigen.json"))
    if args.out_profile:
        prof.write_csv(args.out_profile)
        print(f"wrote {args.out_profile}")
    return 0


def cmd_solve(args) -> int:
    geom = _geometry(args)
    pq = ExponentPair(p=args.p, q=args.q)
    prof_p = spectrum.first_eigenpair(pq.p, geom)
    lam1q = spectrum.first_eigenpair(pq.q, geom).eigenvalue
    beta = spectrum.beta_star(pq.p, pq.q, geom, profile=prof_p)
    mu_lo = args.mu_min if args.mu_min is not None else 0.8 * lam1q
    mu_hi = args.mu_max if args.mu_max is not None else 1.3 * beta
    grid = np.linspace(mu_lo, mu_hi, args.mu_steps)
    emap = pqsolve.mu_sweep(
        pq, geom, grid,
        lambda1_p=prof_p.eigenvalue, lambda1_q=lam1q, beta=beta,
    )
    _emit(emap.to_json(), _out_path(args.out, "solve.json"))
    csv_path = _out_path(args.out_csv, "mu_sweep.csv") or Path("mu_sweep.csv")
    emap.write_csv(csv_path)
    print(f"wrote {csv_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="picone",
        description="Generalized Picone inequalities and (p,q)-Laplacian numerics",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="fuzz one inequality with seeded random points")
    v.add_argument("--ineq", required=True, choices=inequality.INEQUALITIES)
    v.add_argument("--p", type=float, required=True)
    v.add_argument("--q", type=float, default=None)
    v.add_argument("--n", type=int, default=100000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--regime", choices=("aligned", "anti", "random"), default="random")
    v.add_argument("--dim", type=int, default=2)
    v.add_argument("--alpha", type=float, default=1.0)
    v.add_argument("--beta", type=float, default=1.0)
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("region", help="admissible exponent region computations")
    rsub = r.add_subparsers(dest="region_cmd", required=True)
    g = rsub.add_parser("grid")
    g.add_argument("--pmin", type=float, default=1.01)
    g.add_argument("--pmax", type=float, default=4.0)
    g.add_argument("--qmin", type=float, default=1.01)
    g.add_argument("--qmax", type=float, default=3.0)
    g.add_argument("--res", type=int, default=400)
    g.add_argument("--out", default=None)
    pt = rsub.add_parser("ptilde")
    pt.add_argument("--q", type=float, required=True)
    rsub.add_parser("qtilde")
    gp = rsub.add_parser("gap")
    gp.add_argument("--q", type=float, required=True)
    gp.add_argument("--out", default=None)
    cx = rsub.add_parser("counterexample")
    cx.add_argument("--p", type=float, required=True)
    cx.add_argument("--q", type=float, required=True)
    cx.add_argument("--dim", type=int, default=2)
    cx.add_argument("--out", default=None)
    r.set_defaults(func=cmd_region)

    s = sub.add_parser("spectrum", help="first radial eigenpair")
    s.add_argument("--r", type=float, required=True)
    geo = s.add_mutually_exclusive_group(required=True)
    geo.add_argument("--ball", type=int, default=None, help="ball dimension N")
    geo.add_argument("--interval", type=float, default=None, help="interval length")
    s.add_argument("--radius", type=float, default=1.0)
    s.add_argument("--out", default=None)
    s.add_argument("--out-profile", default=None)
    s.set_defaults(func=cmd_spectrum)

    so = sub.add_parser("solve", help="mu-sweep of the two-operator problem")
    so.add_argument("--p", type=float, required=True)
    so.add_argument("--q", type=float, required=True)
    geo = so.add_mutually_exclusive_group(required=True)
    geo.add_argument("--ball", type=int, default=None)
    geo.add_argument("--interval", type=float, default=None)
    so.add_argument("--radius", type=float, default=1.0)
    so.add_argument("--mu-min", type=float, default=None)
    so.add_argument("--mu-max", type=float, default=None)
    so.add_argument("--mu-steps", type=int, default=60)
    so.add_argument("--out", default=None)
    so.add_argument("--out-csv", default=None)
    so.set_defaults(func=cmd_solve)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return args.func(args)
    except PiconeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
