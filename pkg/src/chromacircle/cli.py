"""Command-line front end: instance generation, solving, checking, and SVG
rendering with byte-stable machine-readable output.

Exit codes: 0 success, 1 infeasible or invalid instance (missing color,
unsupported diameter, failed check), 2 parse or usage errors.  The
environment variable CHROMA_EPS overrides the default tolerance 1e-9.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .geometry import DEFAULT_EPS, Circle, ColoredDisk, ColoredPoint, Point, Tolerance
from .mcsc import EmptyInput, MissingColor, PrecisePointSet, mcsc_exact
from .smcsc import Instance, smcsc
from .lmcsc import ColorAbsent, lmcsc_approx, lmcsc_sampling_oracle
from .gadgets import (
    CLAUSE_CORNER_OFFSET,
    make_clause_gadget,
    make_stack,
    make_tightness_instance,
    pdelta_check,
    stack_extreme_realizations,
)
from . import files
from .svg import render_svg

__all__ = ["build_parser", "run", "main"]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="chromacircle",
        description="Color spanning circles over colored unit-disk instances.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate instance files")
    gsub = gen.add_subparsers(dest="generator", required=True)

    g_random = gsub.add_parser("random", help="uniform random disks")
    g_random.add_argument("--n", type=int, required=True)
    g_random.add_argument("--k", type=int, required=True)
    g_random.add_argument("--width", type=float, default=8.0)
    g_random.add_argument("--seed", type=int, default=0)
    g_random.add_argument("-o", "--output")

    g_tight = gsub.add_parser("tight", help="radius-capped adversarial instance")
    g_tight.add_argument("--epsilon", type=float, required=True)
    g_tight.add_argument("--far-blue", type=int, default=3)
    g_tight.add_argument("-o", "--output")

    g_stack = gsub.add_parser("stack", help="rigid stack of three disks")
    g_stack.add_argument("--cx", type=float, default=0.0)
    g_stack.add_argument("--cy", type=float, default=0.0)
    g_stack.add_argument("--pattern", choices=["BRB", "RBR"], default="BRB")
    g_stack.add_argument(
        "--realization",
        choices=["L", "R"],
        help="emit the left/right extreme placement as a points file instead "
        "of the disk instance",
    )
    g_stack.add_argument("-o", "--output")

    g_clause = gsub.add_parser("clause", help="clause gadget")
    g_clause.add_argument("--gx", type=float, default=0.0)
    g_clause.add_argument("--gy", type=float, default=0.0)
    g_clause.add_argument("--corner-offset", type=float, default=CLAUSE_CORNER_OFFSET)
    g_clause.add_argument("-o", "--output")

    solve = sub.add_parser("solve", help="solve an instance")
    ssub = solve.add_subparsers(dest="problem", required=True)
    for name, text in (
        ("mcsc", "exact spanning circle of a precise points file"),
        ("smcsc", "smallest spanning circle over all realizations"),
        ("lmcsc", "certified approximation of the largest spanning circle"),
    ):
        sp = ssub.add_parser(name, help=text)
        sp.add_argument("-i", "--input", required=True)
        sp.add_argument("-o", "--output")
        sp.add_argument("--svg")
        sp.add_argument("--samples", type=int, default=0, help="accepted for "
                        "interface stability; unused by the current solvers")
        sp.add_argument("--seed", type=int, default=0, help="accepted for "
                        "interface stability; unused by the current solvers")

    check = sub.add_parser("check", help="verify properties of point files")
    csub = check.add_subparsers(dest="what", required=True)
    c_pd = csub.add_parser("pdelta", help="cross-color separation check")
    c_pd.add_argument("-i", "--input", required=True)
    c_pd.add_argument("--delta", type=float, required=True)

    oracle = sub.add_parser("oracle", help="sampling probes")
    osub = oracle.add_subparsers(dest="what", required=True)
    o_lm = osub.add_parser("lmcsc", help="lower-bound the largest spanning circle")
    o_lm.add_argument("-i", "--input", required=True)
    o_lm.add_argument("--samples", type=int, default=500)
    o_lm.add_argument("--seed", type=int, default=0)
    o_lm.add_argument("-o", "--output")

    return p


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_canonical_instance(path: str) -> tuple[Instance, dict | None]:
    inst, annotations = files.parse_instance(_read(path))
    return files.canonical_instance(inst), annotations


def _realization_entries(realization: list[ColoredPoint]) -> list[dict]:
    return [
        {"x": p.point[0], "y": p.point[1], "color": p.color, "disk": p.disk_index}
        for p in realization
    ]


def _cmd_gen(args) -> int:
    if args.generator == "random":
        if args.k < 1 or args.n < args.k:
            print("error: need n >= k >= 1", file=sys.stderr)
            return 2
        if args.width <= 0:
            print("error: width must be positive", file=sys.stderr)
            return 2
        rng = np.random.default_rng(args.seed)
        colors = np.concatenate(
            [np.arange(args.k), rng.integers(0, args.k, args.n - args.k)]
        )
        rng.shuffle(colors)
        xy = rng.uniform(0.0, args.width, (args.n, 2))
        disks = [
            ColoredDisk(Point(float(x), float(y)), int(c))
            for (x, y), c in zip(xy, colors)
        ]
        inst = files.canonical_instance(Instance(disks, args.k))
        _write(files.serialize_instance(inst), args.output)
        return 0

    if args.generator == "tight":
        inst = files.canonical_instance(
            make_tightness_instance(args.epsilon, args.far_blue)
        )
        annotations = {
            "gadget": "tightness",
            "epsilon": args.epsilon,
            "far_blue": args.far_blue,
        }
        _write(files.serialize_instance(inst, annotations), args.output)
        return 0

    if args.generator == "stack":
        gadget = make_stack(Point(args.cx, args.cy), args.pattern)
        if args.realization is not None:
            extremes = stack_extreme_realizations(gadget)
            chosen = extremes.left if args.realization == "L" else extremes.right
            pts = files.canonical_points(
                [ColoredPoint(p.point, p.color, None) for p in chosen]
            )
            _write(files.serialize_points(pts), args.output)
            return 0
        inst = files.canonical_instance(Instance(list(gadget.disks), 2))
        roles = {}
        for role, disk in zip(("top", "middle", "bottom"), gadget.disks):
            roles[role] = inst.disks.index(disk)
        annotations = {"gadget": "stack", "pattern": args.pattern, "roles": roles}
        _write(files.serialize_instance(inst, annotations), args.output)
        return 0

    if args.generator == "clause":
        gadget = make_clause_gadget(Point(args.gx, args.gy), args.corner_offset)
        inst = files.canonical_instance(Instance(list(gadget.disks), 2))
        annotations = {
            "gadget": "clause",
            "corner_offset": gadget.corner_offset,
            "roles": {
                "reds": [inst.disks.index(d) for d in gadget.disks[:3]],
                "blue": inst.disks.index(gadget.disks[3]),
            },
            "t_anchors": [[a[0], a[1]] for a in gadget.t_anchors],
            "f_anchors": [[a[0], a[1]] for a in gadget.f_anchors],
        }
        _write(files.serialize_instance(inst, annotations), args.output)
        return 0

    raise AssertionError(args.generator)


def _cmd_solve(args, tol: Tolerance) -> int:
    if args.problem == "mcsc":
        points = files.canonical_points(files.parse_points(_read(args.input)))
        ps = PrecisePointSet.from_points(points)
        result = mcsc_exact(ps, tol)
        circle = result.circle
        entries = [
            {"x": p.point[0], "y": p.point[1], "color": p.color} for p in points
        ]
        text = files.serialize_solution("solve mcsc", circle, entries)
        _write(text, args.output)
        if args.svg:
            _write(render_svg(circle, points=points), args.svg)
        return 0

    inst, _ = _load_canonical_instance(args.input)
    if args.problem == "smcsc":
        result = smcsc(inst, tol)
        circle = result.circle
        realization = result.realization
        certificate = None
        command = "solve smcsc"
    else:
        lres = lmcsc_approx(inst, tol)
        circle = lres.circle
        realization = lres.realization
        c = lres.certificate
        certificate = {
            "r_c": c.r_c,
            "upper": c.upper,
            "factor": c.factor,
            "branch": c.branch,
        }
        command = "solve lmcsc"
    text = files.serialize_solution(
        command, circle, _realization_entries(realization), certificate
    )
    _write(text, args.output)
    if args.svg:
        _write(render_svg(circle, disks=inst.disks, realization=realization), args.svg)
    return 0


def _cmd_check(args, tol: Tolerance) -> int:
    points = files.parse_points(_read(args.input))
    if args.delta <= 0:
        print("error: --delta must be positive", file=sys.stderr)
        return 2
    report = pdelta_check(points, args.delta, tol)
    doc = {
        "command": "check pdelta",
        "delta": args.delta,
        "min_cross_color_distance": (
            None
            if math.isinf(report.min_cross_color_distance)
            else report.min_cross_color_distance
        ),
        "pass": report.passed,
        "violating_pair": (
            None if report.violating_pair is None else list(report.violating_pair)
        ),
    }
    sys.stdout.write(files.dumps(doc))
    return 0 if report.passed else 1


def _cmd_oracle(args, tol: Tolerance) -> int:
    if args.samples < 1:
        print("error: --samples must be at least 1", file=sys.stderr)
        return 2
    inst, _ = _load_canonical_instance(args.input)
    realization, _ = lmcsc_sampling_oracle(inst, args.samples, args.seed, tol)
    circle = mcsc_exact(PrecisePointSet(realization, inst.k), tol).circle
    text = files.serialize_solution(
        "oracle lmcsc", circle, _realization_entries(realization)
    )
    _write(text, args.output)
    return 0


def run(argv=None) -> int:
    """Dispatch one command line; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    raw_eps = os.environ.get("CHROMA_EPS")
    if raw_eps is None:
        tol = Tolerance(DEFAULT_EPS)
    else:
        try:
            eps = float(raw_eps)
        except ValueError:
            eps = -1.0
        if not (eps > 0 and math.isfinite(eps)):
            print(f"error: invalid CHROMA_EPS {raw_eps!r}", file=sys.stderr)
            return 2
        tol = Tolerance(eps)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "solve":
            return _cmd_solve(args, tol)
        if args.command == "check":
            return _cmd_check(args, tol)
        if args.command == "oracle":
            return _cmd_oracle(args, tol)
        raise AssertionError(args.command)
    except (json.JSONDecodeError, files.FileFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (files.InvalidInstance, EmptyInput, MissingColor, ColorAbsent) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> None:
    raise SystemExit(run(sys.argv[1:] if argv is None else argv))
