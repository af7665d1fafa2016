"""Command-line harness: run a verification command, print the table and check
statuses, and optionally export json/csv reports with svg mode figures."""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .geometry import Polygon, regular_polygon, right_triangle, trapezium_fixture
from .reporting import INCONCLUSIVE, VIOLATED, VerificationReport
from .verifier import (cmd_bounds, cmd_conjecture, cmd_order, cmd_polygon_lb, cmd_rhombus,
                       cmd_trapezium, export_report)

SHAPES = {
    "square": lambda: Polygon(((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0))),
    "pentagon": lambda: regular_polygon(5),
    "trapezium": trapezium_fixture,
}


def _common_flags(parser: argparse.ArgumentParser, levels: int):
    parser.add_argument("--levels", type=int, default=levels,
                        help="number of nested refinement levels")
    parser.add_argument("--k", type=int, default=None, help="eigenpairs per solve")
    parser.add_argument("--tol", type=float, default=1e-7, help="solver residual tolerance")
    parser.add_argument("--out", type=Path, default=None,
                        help="output path base for exported reports")
    parser.add_argument("--format", default="json",
                        help="comma-separated export formats: json,csv,svg")
    parser.add_argument("--strict", action="store_true",
                        help="exit nonzero when any check is inconclusive")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedspec",
        description="Verify eigenvalue orderings of mixed Dirichlet-Neumann "
                    "Laplace problems on triangles, rhombi and polygons.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="right-triangle eigenvalue chain")
    p.add_argument("--b", type=float, default=None, help="leg ratio in (0,1]")
    p.add_argument("--alpha", type=float, default=None, help="smallest angle (radians)")
    _common_flags(p, levels=5)

    p = sub.add_parser("conjecture", help="scalene-triangle ordering scan")
    p.add_argument("--nx", type=int, default=10)
    p.add_argument("--ny", type=int, default=10)
    p.add_argument("--margin", type=float, default=0.02)
    p.add_argument("--jobs", type=int, default=1, help="concurrent scan cells")
    _common_flags(p, levels=5)

    p = sub.add_parser("rhombus", help="rhombus mode ordering and symmetry classes")
    p.add_argument("--two-alpha", type=float, required=True,
                   help="smallest rhombus angle (radians, in (0, pi/2])")
    p.add_argument("--no-matching", action="store_true",
                   help="skip the triangle-to-rhombus cross check")
    _common_flags(p, levels=4)

    p = sub.add_parser("trapezium", help="sloped-vs-top Dirichlet comparison")
    _common_flags(p, levels=4)

    p = sub.add_parser("bounds", help="explicit bound formulas vs FEM values")
    p.add_argument("--b-grid", default=",".join(f"{0.1 * i:.1f}" for i in range(1, 10)))
    p.add_argument("--h-grid", default="0.3,0.5,0.6")
    p.add_argument("--alpha-grid", default="0.3,0.5,0.7")
    _common_flags(p, levels=4)

    p = sub.add_parser("polygon-lb", help="Neumann lower bound via consecutive Dirichlet sides")
    p.add_argument("--shape", choices=sorted(SHAPES), default="square")
    p.add_argument("--n", type=int, default=1, help="consecutive Dirichlet sides")
    _common_flags(p, levels=4)

    p = sub.add_parser("plot", help="render one eigenfunction to a figure file")
    p.add_argument("--domain", choices=("triangle", "rhombus", "trapezium"), required=True)
    p.add_argument("--b", type=float, default=0.8)
    p.add_argument("--two-alpha", type=float, default=1.4)
    p.add_argument("--dirichlet", default="", help="triangle side labels, e.g. 'LS' ('' = Neumann)")
    p.add_argument("--index", type=int, default=1, help="1-based eigenvalue index")
    p.add_argument("--level", type=int, default=5, help="refinement level to plot at")
    p.add_argument("--out", type=Path, required=True)
    return parser


def print_report(report: VerificationReport, file=None):
    file = file if file is not None else sys.stdout
    print(f"domain: {report.domain}", file=file)
    print(f"levels: {report.levels}   wall time: {report.wall_time:.2f}s", file=file)
    print(f"{'label':<28}{'extrapolated':>18}{'error_bar':>14}{'order':>8}", file=file)
    for label, est in report.table:
        order = f"{est.observed_order:.2f}" if est.observed_order is not None else "-"
        print(f"{label:<28}{est.value:>18.10g}{est.error_bar:>14.3g}{order:>8}", file=file)
    print("checks:", file=file)
    for c in report.checks:
        print(f"  [{c.status:<12}] {c.name:<48} margin={c.margin:.6g}", file=file)
    counts = report.counts()
    print(f"summary: {counts['verified']} verified, {counts['inconclusive']} inconclusive, "
          f"{counts['violated']} violated", file=file)


def _run_plot(args) -> int:
    from .assembly import assemble
    from .eigensolver import smallest_eigenpairs
    from .geometry import BoundarySpec, classify_sides
    from .meshing import refine_uniform, symmetric_rhombus_mesh, triangulate
    from .plots import save_mode_contour

    if args.domain == "rhombus":
        t = right_triangle(math.tan(args.two_alpha / 2.0))
        mesh, _ = symmetric_rhombus_mesh(t, args.level)
        bc = (BoundarySpec.all_dirichlet(4) if args.dirichlet
              else BoundarySpec.all_neumann(4))
    else:
        if args.domain == "triangle":
            poly = right_triangle(args.b)
            bc = classify_sides(poly).dirichlet_spec(args.dirichlet)
        else:
            poly = trapezium_fixture()
            sides = [int(s) for s in args.dirichlet.split(",") if s != ""]
            bc = BoundarySpec.dirichlet_on(4, sides)
        mesh = triangulate(poly)
        for _ in range(args.level):
            mesh = refine_uniform(mesh)
    spectrum = smallest_eigenpairs(assemble(mesh, bc), k=args.index, tol=1e-7)
    path = save_mode_contour(spectrum.pairs[args.index - 1].vector, args.out,
                             title=f"{args.domain} mode {args.index}")
    print(f"wrote {path}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "plot":
        return _run_plot(args)

    if args.command == "order":
        report = cmd_order(b=args.b, alpha=args.alpha, levels=args.levels,
                           k=args.k or 4, tol=args.tol)
    elif args.command == "conjecture":
        report = cmd_conjecture(nx=args.nx, ny=args.ny, margin=args.margin,
                                levels=args.levels, tol=args.tol, jobs=args.jobs)
    elif args.command == "rhombus":
        report = cmd_rhombus(two_alpha=args.two_alpha, levels=args.levels,
                             k=args.k or 7, tol=args.tol,
                             with_matching=not args.no_matching)
    elif args.command == "trapezium":
        report = cmd_trapezium(levels=args.levels, tol=args.tol)
    elif args.command == "bounds":
        parse_grid = lambda s: tuple(float(v) for v in s.split(",") if v)
        report = cmd_bounds(b_grid=parse_grid(args.b_grid), h_grid=parse_grid(args.h_grid),
                            alpha_grid=parse_grid(args.alpha_grid),
                            levels=args.levels, tol=args.tol)
    elif args.command == "polygon-lb":
        report = cmd_polygon_lb(SHAPES[args.shape](), args.n, levels=args.levels,
                                tol=args.tol, domain_name=args.shape)
    else:  # pragma: no cover
        raise AssertionError(args.command)

    print_report(report)
    if args.out is not None:
        for fmt in args.format.split(","):
            fmt = fmt.strip()
            if not fmt:
                continue
            suffix = {"json": ".json", "csv": ".csv", "svg": ".svg"}.get(fmt, "")
            target = args.out.with_suffix(suffix)
            for path in export_report(report, fmt, target):
                print(f"wrote {path}")

    counts = report.counts()
    if counts[VIOLATED]:
        return 1
    if counts[INCONCLUSIVE]:
        print("warning: inconclusive checks present; re-run with higher --levels",
              file=sys.stderr)
        if args.strict:
            return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
