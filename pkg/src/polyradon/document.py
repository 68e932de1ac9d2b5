"""Polygon documents (JSON) and check reports."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .plane import SymPolygon, Vec2, validate
from .radon import RadonVerdict, check_tvp
from .scalar import DEFAULT_EPS, format_scalar, parse_scalar

SCHEMA = 1


class DocumentError(ValueError):
    pass


def _coord(value, mode: str):
    if mode == "exact":
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            raise DocumentError(f"exact mode takes integers or 'p/q' strings, got {value!r}")
        try:
            out = parse_scalar(value)
        except (ValueError, ZeroDivisionError) as err:
            raise DocumentError(f"bad rational {value!r}") from err
        if not isinstance(out, Fraction):
            raise DocumentError(f"decimal {value!r} in exact mode")
        return out
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise DocumentError(f"bad coordinate {value!r}")
    try:
        return float(parse_scalar(value))
    except (ValueError, ZeroDivisionError) as err:
        raise DocumentError(f"bad coordinate {value!r}") from err


def parse_document(text: str) -> tuple[list[Vec2], str, float | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"not JSON: {err}") from err
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object")
    if doc.get("schema") != SCHEMA:
        raise DocumentError(f"unsupported schema {doc.get('schema')!r}")
    mode = doc.get("mode")
    if mode not in ("exact", "float"):
        raise DocumentError(f"mode must be 'exact' or 'float', got {mode!r}")
    raw = doc.get("vertices")
    if not isinstance(raw, list) or not raw:
        raise DocumentError("vertices must be a nonempty list")
    verts = []
    for pair in raw:
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentError(f"vertex must be a coordinate pair, got {pair!r}")
        verts.append(Vec2(_coord(pair[0], mode), _coord(pair[1], mode)))
    eps = doc.get("eps_rel")
    if eps is not None and (isinstance(eps, bool) or not isinstance(eps, (int, float)) or eps < 0):
        raise DocumentError(f"bad eps_rel {eps!r}")
    return verts, mode, eps


def polygon_from_document(text: str, eps_override: float | None = None) -> SymPolygon:
    verts, mode, eps = parse_document(text)
    if mode == "exact":
        return validate(verts)
    eps = eps_override if eps_override is not None else (eps if eps is not None else DEFAULT_EPS)
    return validate(verts, eps_rel=eps)


def load_polygon(path: str | Path, eps_override: float | None = None) -> SymPolygon:
    return polygon_from_document(Path(path).read_text(encoding="utf-8"), eps_override)


def serialize(p: SymPolygon) -> str:
    """Document text for ``p``; one vertex per line, canonical order."""
    lines = ["{", f'  "schema": {SCHEMA},', f'  "mode": "{p.mode}",']
    if not p.exact:
        lines.append(f'  "eps_rel": {json.dumps(p.tol.eps_rel)},')
    lines.append('  "vertices": [')
    pairs = [json.dumps([format_scalar(v.x), format_scalar(v.y)]) for v in p.vertices]
    lines += [f"    {pair}," for pair in pairs[:-1]] + [f"    {pairs[-1]}"]
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def vec_json(v: Vec2) -> list:
    return [format_scalar(v.x), format_scalar(v.y)]


def tvp_table(p: SymPolygon) -> list[dict]:
    rows = []
    for i in range(p.n):
        t = check_tvp(p, i)
        e = p.edge(i)
        rows.append({
            "edge": i,
            "start": vec_json(e.start),
            "end": vec_json(e.end),
            "functional": [format_scalar(e.functional.a), format_scalar(e.functional.b)],
            "tvp": t.holds,
            "translated_vertex": t.vertex,
            "landing": [vec_json(sp.point) for sp in t.landing],
        })
    return rows


def build_report(p: SymPolygon, verdict: RadonVerdict, elapsed: float) -> dict:
    report = {
        "verdict": "Radon" if verdict.radon else "NotRadon",
        "method": verdict.method,
        "mode": p.mode,
        "eps_rel": p.tol.eps_rel,
        "vertex_count": p.n,
        "vertices": [vec_json(v) for v in p.vertices],
        "tvp": tvp_table(p),
        "elapsed_seconds": elapsed,
    }
    if verdict.radon:
        report["certificate"] = [
            {
                "pair": list(r.pair),
                "v": r.v,
                "w": r.w,
                "segment": r.label,
                "segment_vertices": list(r.segment),
                "edge": r.edge,
                "x": r.x,
                "common_vertex": r.common,
            }
            for r in verdict.certificate
        ]
    else:
        x, y = verdict.witness
        report["witness"] = {"x": vec_json(x), "y": vec_json(y), "site": verdict.site}
        if verdict.failure is not None:
            report["failure"] = {
                "pair": list(verdict.failure.pair),
                "clause": verdict.failure.clause,
                "reason": verdict.failure.reason,
            }
    return report
