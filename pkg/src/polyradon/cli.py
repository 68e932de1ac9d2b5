"""Command line: ``polyradon {check,ortho,gen,search,render}``.

Exit codes: 0 Radon (or success), 1 NotRadon, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .construct import (
    DegenerateHexagon,
    InvalidConfig,
    InvalidCount,
    SearchConfig,
    gen_hexagon,
    gen_regular,
    search_irregular,
)
from .document import DocumentError, build_report, load_polygon, serialize, vec_json
from .ortho import ZeroLeftArgument, ortho_cone
from .plane import InvalidPolygon, Vec2
from .radon import is_radon_oracle, is_radon_tep
from .render import render_svg
from .scalar import DEFAULT_EPS, format_scalar, parse_scalar

EXIT_RADON, EXIT_NOT_RADON, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _load(args):
    try:
        return load_polygon(args.path, args.eps)
    except OSError as err:
        raise InputError(f"cannot read {args.path}: {err.strerror or err}") from err
    except InvalidPolygon as err:
        raise InputError(f"{type(err).__name__}: {err}") from err
    except DocumentError as err:
        raise InputError(f"bad document: {err}") from err


def _fmt_vec(v) -> str:
    x, y = vec_json(v)
    return f"({x}, {y})"


def cmd_check(args) -> int:
    p = _load(args)
    start = time.perf_counter()
    verdict = is_radon_oracle(p) if args.oracle else is_radon_tep(p)
    elapsed = time.perf_counter() - start
    report = build_report(p, verdict, elapsed)
    lines = [f"{report['verdict']} ({verdict.method}, {p.mode}, eps_rel={p.tol.eps_rel:g}, {p.n} vertices)"]
    if verdict.radon:
        for r in verdict.certificate:
            lines.append(
                f"  edges {r.pair[0]},{r.pair[1]}: v{r.v}, w{r.w}, segment {r.label} "
                f"= edge {r.edge} translates to v{r.x}"
            )
    else:
        x, y = verdict.witness
        lines.append(f"  witness: x = {_fmt_vec(x)} is orthogonal to y = {_fmt_vec(y)}, not conversely")
        if verdict.failure is not None:
            lines.append(f"  edges {verdict.failure.pair}: {verdict.failure.reason}")
    lines.append("  edge  start -> end  TVP")
    for row in report["tvp"]:
        mark = f"v{row['translated_vertex']}" if row["tvp"] else "no"
        lines.append(f"  {row['edge']:>4}  {row['start']} -> {row['end']}  {mark}")
    lines.append(f"  elapsed {elapsed:.4f} s")
    _emit(args, report, "\n".join(lines))
    return EXIT_RADON if verdict.radon else EXIT_NOT_RADON


def _parse_point(text: str, exact: bool) -> Vec2:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"--point takes x,y, got {text!r}")
    try:
        xs = [parse_scalar(s.strip()) for s in parts]
    except (ValueError, ZeroDivisionError) as err:
        raise InputError(f"bad point {text!r}") from err
    return Vec2(*(Fraction(c) if exact else float(c) for c in xs))


def cmd_ortho(args) -> int:
    p = _load(args)
    x = _parse_point(args.point, p.exact)
    try:
        cone = ortho_cone(p, x)
    except ZeroLeftArgument as err:
        raise InputError(str(err)) from err
    f, g = cone.f, cone.g
    rays = [[vec_json(sp.point) for sp in pair] for pair in cone.rays]
    payload = {
        "point": vec_json(x),
        "base": {"point": vec_json(cone.base.point), "kind": cone.base.kind, "index": cone.base.index},
        "f": [format_scalar(f.a), format_scalar(f.b)],
        "g": [format_scalar(g.a), format_scalar(g.b)],
        "degenerate": cone.degenerate,
        "rays": rays,
        "half": [vec_json(r) for r in cone.half_rays],
        "rule": "x orthogonal to y iff f(y) * g(y) <= 0",
    }
    if cone.degenerate:
        body = f"  degenerate: the line spanned by {_fmt_vec(cone.half_rays[0])}"
    else:
        a, b = cone.half_rays
        body = f"  rays: +-{_fmt_vec(a)}, +-{_fmt_vec(b)}\n  K is the cone between {_fmt_vec(a)} and {_fmt_vec(b)}"
    text = (
        f"x = {_fmt_vec(x)}, x/||x|| = {_fmt_vec(cone.base.point)} ({cone.base.kind} {cone.base.index})\n"
        f"  f = {payload['f']}, g = {payload['g']}\n{body}\n"
        f"  y is in the cone iff f(y) * g(y) <= 0"
    )
    _emit(args, payload, text)
    return 0


def cmd_gen(args) -> int:
    eps = args.eps
    try:
        if args.kind == "regular":
            p = gen_regular(args.vertices, eps if eps is not None else DEFAULT_EPS)
        else:
            alpha, scale = parse_scalar(args.alpha), parse_scalar(args.apex_scale)
            p = gen_hexagon(alpha, args.apex, scale, eps)
    except (InvalidCount, DegenerateHexagon, ValueError, ZeroDivisionError) as err:
        raise InputError(f"{type(err).__name__}: {err}") from err
    sys.stdout.write(serialize(p))
    return 0


def cmd_search(args) -> int:
    template = args.template
    if template == "auto":
        template = "apex" if args.vertices == 6 else "free"
    try:
        alpha = Fraction(args.alpha) if args.alpha is not None else None
        cfg = SearchConfig(
            vertices=args.vertices, seed=args.seed, restarts=args.budget,
            max_iter=args.max_iter, template=template, alpha=alpha, workers=args.workers,
        )
    except (InvalidConfig, ValueError, ZeroDivisionError) as err:
        raise InputError(f"{type(err).__name__}: {err}") from err
    result = search_irregular(cfg)
    out = Path(args.out) if args.out else None
    if out is not None and result.found:
        out.mkdir(parents=True, exist_ok=True)
    found = []
    for i, f in enumerate(result.found):
        name = f"found_{cfg.vertices}_{cfg.seed}_{i}.json"
        if out is not None:
            (out / name).write_text(serialize(f.polygon), encoding="utf-8")
        found.append({
            "file": str(out / name) if out is not None else None,
            "restart": f.restart,
            "score": f.score,
            "tep": f.tep.radon,
            "oracle": f.oracle.radon,
            "repaired": f.repaired,
            "cv_edges": f.cv_edges,
            "cv_angles": f.cv_angles,
            "apex_scale": f.apex_scale,
            "vertices": [vec_json(v) for v in f.polygon.vertices],
        })
    log = [{"restart": e.restart, "score": e.score, "iterations": e.iterations, "status": e.status}
           for e in result.log]
    lines = [f"search: {cfg.vertices} vertices, template {cfg.template}, seed {cfg.seed}, "
             f"{cfg.restarts} restarts, {len(found)} found"]
    lines += [f"  restart {e['restart']}: score {e['score']:.3g} after {e['iterations']} sweeps, {e['status']}"
              for e in log]
    for item in found:
        extra = f", apex_scale {item['apex_scale']:.9f}" if item["apex_scale"] is not None else ""
        lines.append(f"  restart {item['restart']}: Radon (tep and oracle), cv edges {item['cv_edges']:.4f}, "
                     f"cv angles {item['cv_angles']:.4f}{extra}" + (f" -> {item['file']}" if item["file"] else ""))
    _emit(args, {"config": {"vertices": cfg.vertices, "seed": cfg.seed, "restarts": cfg.restarts,
                            "template": cfg.template}, "found": found, "log": log}, "\n".join(lines))
    return 0


def cmd_render(args) -> int:
    p = _load(args)
    svg = render_svg(p, show_kernels=args.show_kernels, show_cones=args.show_cones)
    if args.output in (None, "-"):
        sys.stdout.write(svg)
        return 0
    try:
        Path(args.output).write_text(svg, encoding="utf-8")
    except OSError as err:
        raise InputError(f"cannot write {args.output}: {err.strerror or err}") from err
    return 0


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--eps", type=float, default=argparse.SUPPRESS,
                        help="relative tolerance for float-mode polygons")

    parser = argparse.ArgumentParser(prog="polyradon", description="Radon tests for polygonal normed planes.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--eps", type=float, default=None, help="relative tolerance for float-mode polygons")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide whether a polygon is Radon")
    p.add_argument("path")
    p.add_argument("--oracle", action="store_true", help="use the brute-force symmetry check")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ortho", parents=[common], help="orthogonality cone of a point")
    p.add_argument("path")
    p.add_argument("--point", required=True, help="x,y")
    p.set_defaults(func=cmd_ortho)

    p = sub.add_parser("gen", parents=[common], help="print a generated polygon document")
    gsub = p.add_subparsers(dest="kind", required=True)
    g = gsub.add_parser("regular", parents=[common])
    g.add_argument("--vertices", type=int, required=True)
    g = gsub.add_parser("hexagon", parents=[common])
    g.add_argument("--alpha", required=True)
    g.add_argument("--apex", choices=("vertical", "horizontal"), default="vertical")
    g.add_argument("--apex-scale", default="2")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("search", parents=[common], help="search for irregular Radon polygons")
    p.add_argument("--vertices", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=4, help="number of restarts")
    p.add_argument("--max-iter", type=int, default=400)
    p.add_argument("--template", choices=("auto", "free", "apex"), default="auto",
                   help="auto: apex for hexagons, free otherwise")
    p.add_argument("--alpha", default=None, help="fixed alpha for the apex template")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default=None, help="directory for found polygon documents")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("render", parents=[common], help="draw a polygon as SVG")
    p.add_argument("path")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--show-cones", action="store_true")
    p.add_argument("--show-kernels", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
