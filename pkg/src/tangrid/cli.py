"""Command-line interface.

Exit status: 0 on success, 1 when a geometric validation fails, 2 on usage
or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fileio
from .centers import centers_report, reciprocal_check, wu_check
from .demo import write_figures
from .dissection import dissect, dissect_square_tiling, t_junction_residual, validate
from .errors import GapInfeasible, TangridError
from .fileio import DocumentError
from .geometry import (
    DEFAULT_TOL,
    classify,
    dist,
    incircle,
    is_tangential,
    pitot_defect,
    relative_pitot_defect,
)
from .rng import random_tangential
from .solver import normalize
from .svg import render_svg

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_check(args) -> int:
    q, label = fileio.read_quad(args.input)
    rel = relative_pitot_defect(q)
    tangential = is_tangential(q, args.tol)
    if label:
        print(f"label: {label}")
    print(f"pitot_defect: {pitot_defect(q)!r}")
    print(f"relative_defect: {rel!r}")
    print(f"class: {classify(q, args.tol)}")
    print(f"tangential: {'yes' if tangential else 'no'}")
    if not tangential:
        return EXIT_FAIL
    model = normalize(q, args.tol)
    ic = incircle(q, args.tol)
    print(f"incircle: center=({ic.center.u!r}, {ic.center.v!r}) radius={ic.radius!r}")
    print(f"relabel: {[model.input_index(i) for i in range(4)]}")
    if model.params is not None:
        p = model.params
        print(f"params: X={p.X!r} Y={p.Y!r} L={p.L!r}")
    return EXIT_OK


def cmd_dissect(args) -> int:
    q, label = fileio.read_quad(args.input)
    if args.tiling:
        tiling = fileio.read_tiling(args.tiling)
        pairs = dissect_square_tiling(q, tiling, args.tol)
        cells = [c for c, _ in pairs]
        report = validate(cells, args.tol)
        doc = fileio.tiling_dissection_doc(tiling, cells, q, report.max_defect,
                                           t_junction_residual(q, tiling, args.tol), label)
    else:
        d = dissect(q, args.n, args.tol)
        report = validate(d, args.tol)
        doc = fileio.dissection_doc(d, q, report.max_defect, label)
    _emit(fileio.dumps(doc), args.out)
    print(f"cells: {len(report.defects)} max_defect: {report.max_defect!r}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    doc = fileio.load(args.input)
    if isinstance(doc, dict) and "cells" in doc:
        source, _ = fileio.parse_quad(doc.get("source"))
        try:
            cells = [[tuple(p) for p in c] for c in doc["cells"]]
        except TypeError as exc:
            raise DocumentError(f"malformed cells: {exc}") from exc
        corners = []
    else:
        d, source = fileio.parse_dissection(doc)
        L, n = d.lattice, d.n
        cells = [(L[j][k], L[j][k + 1], L[j + 1][k + 1], L[j + 1][k]) for j in range(n) for k in range(n)]
        corners = [d.vertex(0, 0), d.vertex(n, 0), d.vertex(n, n), d.vertex(0, n)]
    report = validate(cells, args.tol)
    ok = report.passed
    if corners:
        # each lattice corner must sit on a vertex of the source quad
        scale = source.diameter()
        corner_err = max(min(dist(c, v) for v in source) for c in corners) / scale
        print(f"corner_mismatch: {corner_err!r}")
        ok = ok and corner_err <= 1e-8
    print(f"cells: {len(report.defects)}")
    print(f"max_defect: {report.max_defect!r}")
    if report.failing:
        print(f"failing_cells: {report.failing}")
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_centers(args) -> int:
    q, _ = fileio.read_quad(args.input)
    rep = centers_report(q, args.tol)
    radii, defect = reciprocal_check(q, args.tol)
    for name in ("I", "S", "W"):
        p = getattr(rep, name)
        print(f"{name}: ({p.u!r}, {p.v!r})")
    print(f"kind: {rep.kind.value}")
    print(f"collinearity_residual: {rep.collinearity_residual!r}")
    print(f"perpendicularity_residual: {rep.perpendicularity_residual!r}")
    print(f"radii: A={radii.r_a!r} B={radii.r_b!r} C={radii.r_c!r} D={radii.r_d!r}")
    print(f"reciprocal_defect: {defect!r}")
    print(f"wu_defect: {wu_check(q)!r}")
    worst = max(rep.collinearity_residual, rep.perpendicularity_residual, defect)
    return EXIT_OK if worst <= 1e-8 else EXIT_FAIL


def cmd_render(args) -> int:
    q, label = fileio.read_quad(args.input)
    d = dissect(q, args.n, args.tol)
    svg = render_svg(d, incircles=args.incircles, centers=args.centers,
                     triple_grid=args.triple_grid, title=label)
    _emit(svg, args.svg)
    return EXIT_OK


def cmd_random(args) -> int:
    quads = random_tangential(args.seed, args.count, args.min_gap)
    doc = {
        "seed": args.seed,
        "count": args.count,
        "min_gap": args.min_gap,
        "quads": [fileio.quad_doc(q, f"random-{args.seed}-{i}") for i, q in enumerate(quads)],
    }
    _emit(fileio.dumps(doc), args.out)
    return EXIT_OK


def cmd_demo(args) -> int:
    for path in write_figures(args.out_dir):
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tangrid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="relative tolerance (default 1e-9)")
        p.set_defaults(func=func)
        return p

    p = add("check", cmd_check, "Pitot defect, class and incircle of a quad file")
    p.add_argument("--input", required=True)

    p = add("dissect", cmd_dissect, "n x n grid or square-tiling dissection")
    p.add_argument("--input", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--tiling")
    p.add_argument("--out")

    p = add("verify", cmd_verify, "re-check every cell of a dissection file")
    p.add_argument("--input", required=True)

    p = add("centers", cmd_centers, "I, S, W collinearity and reciprocal radii")
    p.add_argument("--input", required=True)

    p = add("render", cmd_render, "SVG figure of an n x n dissection")
    p.add_argument("--input", required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--svg")
    p.add_argument("--incircles", action="store_true")
    p.add_argument("--centers", action="store_true")
    p.add_argument("--triple-grid", action="store_true")

    p = add("random", cmd_random, "seeded random tangential quads")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--min-gap", type=float, default=0.15)
    p.add_argument("--out")

    p = add("demo", cmd_demo, "regenerate the SVG illustration set")
    p.add_argument("--out-dir", default="figures")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("--n must be at least 1")
    try:
        return args.func(args)
    except (DocumentError, GapInfeasible) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TangridError as exc:
        print(f"validation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
