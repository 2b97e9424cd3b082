#!/usr/bin/env python3
"""Tabulate weighted norms of the monomials q^n across alpha and p.

Emits a CSV table (stdout or --output) with one row per (n, alpha, p):
the slice p-norm on C_i, the ball norm from the sampled sphere, their
ratio, and the weighted sup norm.  For p = 2 and R -> infinity the squared
slice norm of q^n approaches n!/alpha^n up to the (alpha/pi)^n/pi prefactor,
so the table doubles as a quick sanity read on quadrature behaviour as
alpha grows; plot it externally if a picture is wanted.

Example:

    python3 scripts/norm_sweep.py --degrees 0,1,2,4 --alphas 0.5,1,2 --p 2,3
"""

import argparse
import sys

from slicefock import (UNIT_I, FockParams, Quaternion, QuadratureGrid,
                       SliceSeries, default_sphere, fock_norm_p, slice_norm_p,
                       sup_norm)


def monomial(n: int) -> SliceSeries:
    return SliceSeries((Quaternion(0.0),) * n + (Quaternion(1.0),))


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degrees", default="0,1,2,3,4")
    parser.add_argument("--alphas", default="0.5,1.0,2.0")
    parser.add_argument("--p", default="2.0,3.0")
    parser.add_argument("--radius", type=float, default=1.0)
    parser.add_argument("--sphere", type=int, default=8)
    parser.add_argument("--radial", type=int, default=64)
    parser.add_argument("--angular", type=int, default=128)
    parser.add_argument("--output", default=None,
                        help="CSV file to write (default stdout)")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    degrees = [int(s) for s in args.degrees.split(",") if s]
    alphas = [float(s) for s in args.alphas.split(",") if s]
    exponents = [float(s) for s in args.p.split(",") if s]
    sphere = default_sphere(args.sphere)
    grid = QuadratureGrid.build(args.radial, args.angular, args.radius)

    lines = ["n,alpha,p,slice_norm,ball_norm,ball_over_slice,sup_norm"]
    for n in degrees:
        f = monomial(n)
        for alpha in alphas:
            sup_params = FockParams(alpha=alpha, p=2.0, n=1,
                                    radius=args.radius)
            sup = sup_norm(f, sup_params, sphere).value
            for p in exponents:
                params = FockParams(alpha=alpha, p=p, n=1, radius=args.radius)
                on_slice = slice_norm_p(f, UNIT_I, params, grid)
                ball = fock_norm_p(f, params, grid, sphere).value
                lines.append(f"{n},{alpha!r},{p!r},{on_slice!r},{ball!r},"
                             f"{ball / on_slice!r},{sup!r}")

    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
        print(f"wrote {len(lines) - 1} rows to {args.output}")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
