"""SVG drawings of a unit sphere with its kernels and orthogonality cones."""

from __future__ import annotations

from .ortho import ortho_cone
from .plane import SymPolygon
from .radon import check_tvp

SIZE = 480
MARGIN = 40


def _num(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(p: SymPolygon, show_kernels: bool = False, show_cones: bool = False,
               title: str | None = None) -> str:
    """Standalone SVG text; identical input gives identical bytes."""
    pts = [v.to_float() for v in p.vertices]
    r = max(max(abs(x), abs(y)) for x, y in pts) * 1.25
    unit = (SIZE / 2 - MARGIN) / r
    cx = cy = SIZE / 2

    def sx(x: float) -> str:
        return _num(cx + x * unit)

    def sy(y: float) -> str:
        return _num(cy - y * unit)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
    ]
    if title:
        out.append(f'<text x="{MARGIN // 2}" y="{MARGIN // 2 + 4}" font-family="serif" '
                   f'font-size="14">{title}</text>')
    out.append('<g id="axes" stroke="#999999" stroke-width="1">')
    out.append(f'<line x1="{sx(-r)}" y1="{sy(0)}" x2="{sx(r)}" y2="{sy(0)}"/>')
    out.append(f'<line x1="{sx(0)}" y1="{sy(-r)}" x2="{sx(0)}" y2="{sy(r)}"/>')
    out.append("</g>")

    if show_cones:
        out.append('<g id="cones" fill="#4477aa" fill-opacity="0.12" stroke="none">')
        for i, v in enumerate(p.vertices):
            cone = ortho_cone(p, v)
            a, b = (q.to_float() for q in cone.half_rays)
            for sgn in (1, -1):
                out.append(
                    f'<polygon data-vertex="{i}" points="{sx(0)},{sy(0)} '
                    f'{sx(sgn * a[0])},{sy(sgn * a[1])} {sx(sgn * b[0])},{sy(sgn * b[1])}"/>'
                )
        out.append("</g>")

    if show_kernels:
        out.append('<g id="kernels" stroke-width="1" stroke-dasharray="4 3">')
        for i in range(p.n):
            t = check_tvp(p, i)
            x, y = t.landing[0].point.to_float()
            color = "#228833" if t.holds else "#cc3311"
            reach = r / max(abs(x), abs(y))
            out.append(
                f'<line data-edge="{i}" data-tvp="{str(t.holds).lower()}" stroke="{color}" '
                f'x1="{sx(-x * reach)}" y1="{sy(-y * reach)}" x2="{sx(x * reach)}" y2="{sy(y * reach)}"/>'
            )
        out.append("</g>")

    poly = " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)
    out.append(f'<polygon id="sphere" points="{poly}" fill="none" stroke="#000000" stroke-width="2"/>')
    out.append('<g id="vertices" font-family="serif" font-size="12">')
    for i, (x, y) in enumerate(pts):
        out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="3" fill="#000000"/>')
        out.append(f'<text x="{sx(x * 1.08)}" y="{sy(y * 1.08)}" text-anchor="middle">v{i}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
