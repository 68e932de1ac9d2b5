"""Polygon generators and the search harness for irregular Radon polygons."""

from __future__ import annotations

import math
import os
import random
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .plane import (
    InvalidPolygon,
    SymPolygon,
    Vec2,
    polygon_from_half,
    sphere_intersect_line,
    validate,
)
from .radon import RadonVerdict, is_radon_oracle, is_radon_tep
from .scalar import DEFAULT_EPS, Scalar, is_exact_number

THREADS_ENV = "POLYRADON_THREADS"


class InvalidCount(ValueError):
    pass


class DegenerateHexagon(ValueError):
    pass


class InvalidConfig(ValueError):
    pass


def gen_regular(m: int, eps_rel: float = DEFAULT_EPS) -> SymPolygon:
    """Regular m-gon with vertices at angles (2j - 1) * pi / m, j = 1..m.

    Only the first half is computed; the rest are exact negatives.
    """
    if m < 4 or m % 2:
        raise InvalidCount(f"need an even vertex count >= 4, got {m}")
    half = [
        Vec2(math.cos((2 * j - 1) * math.pi / m), math.sin((2 * j - 1) * math.pi / m))
        for j in range(1, m // 2 + 1)
    ]
    return polygon_from_half(half, eps_rel=eps_rel)


def gen_hexagon(alpha: Scalar, apex: str = "vertical", apex_scale: Scalar = 2,
                eps_rel: float | None = None) -> SymPolygon:
    """Hexagon with vertices +-(1, alpha), +-(1, -alpha) and an apex pair.

    The apex pair is +-(0, apex_scale * alpha) for ``apex="vertical"`` and
    +-(apex_scale, 0) for ``apex="horizontal"``.  Rational parameters give
    an exact polygon.
    """
    if not alpha > 0 or not apex_scale > 0:
        raise DegenerateHexagon("alpha and apex_scale must be positive")
    exact = is_exact_number(alpha) and is_exact_number(apex_scale) and eps_rel is None
    if exact:
        alpha, apex_scale = Fraction(alpha), Fraction(apex_scale)
    else:
        alpha, apex_scale = float(alpha), float(apex_scale)
    if apex == "vertical":
        top = Vec2(0 * alpha, apex_scale * alpha)
    elif apex == "horizontal":
        top = Vec2(apex_scale, 0 * alpha)
    else:
        raise ValueError(f"apex must be 'vertical' or 'horizontal', not {apex!r}")
    half = [Vec2(1 + 0 * alpha, alpha), Vec2(1 + 0 * alpha, -alpha), top]
    try:
        return polygon_from_half(half, eps_rel=None if exact else (eps_rel or DEFAULT_EPS))
    except InvalidPolygon as err:
        raise DegenerateHexagon(str(err)) from err


def _convex_hull(points: list[Vec2]) -> list[Vec2]:
    pts = sorted(set(points), key=lambda v: (v.x, v.y))
    if len(pts) < 3:
        return pts

    def chain(seq):
        out: list[Vec2] = []
        for q in seq:
            while len(out) >= 2 and (out[-1] - out[-2]).cross(q - out[-1]) <= 0:
                out.pop()
            out.append(q)
        return out

    lower, upper = chain(pts), chain(reversed(pts))
    return lower[:-1] + upper[:-1]


def random_polygon(rng: random.Random, max_vertices: int = 30, min_vertices: int = 4) -> SymPolygon:
    """Random exact centrally symmetric polygon.

    The vertex count is drawn uniformly from the even counts in range.  Half
    of the points sit on a jittered fan of directions in the upper
    half-plane (exact rational points of the unit circle) at random
    rational radii, whose spread shrinks with the fan spacing so that most
    points stay extreme.  The set is mirrored through the origin and
    convex-hulled; draws whose hull loses a point are rejected.
    """
    lo = max(4, min_vertices + min_vertices % 2)
    m = 2 * rng.randint(lo // 2, max_vertices // 2)
    h = m // 2
    spread = min(30, max(1, round(100 / (h * h))))
    while True:
        pts = []
        for j in range(h):
            theta = (j + rng.uniform(0.1, 0.9)) * math.pi / h
            t = Fraction(math.tan(theta / 2)).limit_denominator(97)
            r = Fraction(rng.randint(100 - spread, 100 + spread), 100)
            d = 1 + t * t
            pts.append(Vec2(r * (1 - t * t) / d, r * 2 * t / d))
        hull = _convex_hull(pts + [-q for q in pts])
        if len(hull) == m:
            try:
                return validate(hull)
            except InvalidPolygon:
                continue


def edge_lengths(p: SymPolygon) -> list[float]:
    return [(e.end - e.start).norm() for e in p.edges()]


def interior_angles(p: SymPolygon) -> list[float]:
    out = []
    for i in range(p.n):
        a = p.vertex(i - 1) - p.vertex(i)
        b = p.vertex(i + 1) - p.vertex(i)
        ax, ay = a.to_float()
        bx, by = b.to_float()
        out.append(math.atan2(abs(ax * by - ay * bx), ax * bx + ay * by))
    return out


def coefficient_of_variation(xs: Sequence[float]) -> float:
    return statistics.pstdev(xs) / statistics.fmean(xs)


def irregularity(p: SymPolygon) -> tuple[float, float]:
    """Coefficients of variation of edge lengths and of interior angles."""
    return coefficient_of_variation(edge_lengths(p)), coefficient_of_variation(interior_angles(p))


def _dist(a: Vec2, b: Vec2) -> float:
    ax, ay = a.to_float()
    bx, by = b.to_float()
    return math.hypot(ax - bx, ay - by)


def violation_score(p: SymPolygon) -> float:
    """Nonnegative relaxation of TEP; zero exactly when TEP holds.

    Sums, scaled by the largest vertex coordinate:

    * per edge, the distance from its landing point to the nearest vertex;
    * per adjacent pair, with each landing point snapped to its nearest
      vertex ``v``, ``w``: the distance from ``+-w`` to the nearest
      neighbour of ``v`` (zero iff ``vw`` or ``v(-w)`` is an edge);
    * when that connecting edge exists, the distance from its own landing
      point to plus or minus the vertex shared by the pair.
    """
    n, k = p.n, p.k
    V = p.vertices
    landing = []
    snapped = []
    total = 0.0
    for e in range(n):
        z = sphere_intersect_line(p, p.functionals[e])[0].point
        d = [_dist(z, v) for v in V]
        j = min(range(n), key=d.__getitem__)
        landing.append(z)
        snapped.append(j)
        total += d[j]
    for e in range(n):
        a, b = snapped[e], snapped[(e + 1) % n]
        best, conn = math.inf, None
        for target in (b, (b + k) % n):
            for nb in ((a - 1) % n, (a + 1) % n):
                d = 0.0 if nb == target else _dist(V[nb], V[target])
                if d < best:
                    best = d
                    conn = None if d else (a if nb == (a + 1) % n else nb)
        total += best
        if conn is not None:
            u = V[(e + 1) % n]
            z = landing[conn]
            total += min(_dist(z, u), _dist(z, -u))
    return total / p.tol.scale


# -- search ---------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    """Settings for :func:`search_irregular`.

    ``template="free"`` searches all vertices of one half (the first pinned
    to ``(1, y)``); ``template="apex"`` keeps ``+-(1, alpha), +-(1, -alpha)``
    fixed and moves only the apex pair (6 vertices only).  ``restarts`` is
    the restart budget; zero yields an empty result.
    """

    vertices: int = 6
    seed: int = 0
    restarts: int = 4
    max_iter: int = 400
    step: float = 0.25
    min_step: float = 1e-12
    shrink: float = 0.5
    tol: float = 1e-7
    irregularity: float = 1e-3
    template: str = "free"
    alpha: Fraction | None = None
    max_denominator: int = 10**6
    workers: int | None = None

    def __post_init__(self):
        if self.vertices < 6 or self.vertices % 4 != 2:
            raise InvalidConfig(
                f"vertex count must be 4n+2 with n >= 1, got {self.vertices}; "
                "polygons with 4n vertices are never Radon"
            )
        if self.template not in ("free", "apex"):
            raise InvalidConfig(f"unknown template {self.template!r}")
        if self.template == "apex" and self.vertices != 6:
            raise InvalidConfig("the apex template is a hexagon template")
        if self.restarts < 0 or self.max_iter <= 0:
            raise InvalidConfig("budgets must be nonnegative, iterations positive")
        if not (0 < self.shrink < 1 and self.step > 0 and self.min_step > 0):
            raise InvalidConfig("bad step schedule")
        if self.alpha is not None and not self.alpha > 0:
            raise InvalidConfig("alpha must be positive")


@dataclass
class Found:
    polygon: SymPolygon
    float_vertices: tuple[tuple[float, float], ...]
    restart: int
    score: float
    trace: list[float]
    tep: RadonVerdict
    oracle: RadonVerdict
    cv_edges: float
    cv_angles: float
    repaired: bool = False
    alpha: Fraction | None = None
    apex: tuple[float, float] | None = None

    @property
    def apex_scale(self) -> float | None:
        """Apex height over alpha (vertical) or apex abscissa (horizontal)."""
        if self.apex is None:
            return None
        ax, ay = self.apex
        if abs(ax) <= abs(ay):
            return ay / float(self.alpha)
        return ax


@dataclass
class RestartLog:
    restart: int
    score: float
    iterations: int
    status: str


@dataclass
class SearchResult:
    config: SearchConfig
    found: list[Found] = field(default_factory=list)
    log: list[RestartLog] = field(default_factory=list)


def pattern_search(fun: Callable[[list[float]], float], x0: Sequence[float], step: float,
                   min_step: float, shrink: float, max_iter: int, stop: float = 0.0):
    """Coordinate-wise pattern search with a shrinking step.

    Each sweep tries ``+-step`` along every coordinate and keeps the first
    improvement; a sweep without one shrinks the step.  Returns
    ``(x, f(x), trace, sweeps)`` with the best value after every sweep.
    """
    x = list(x0)
    fx = fun(x)
    trace = [fx]
    sweeps = 0
    while sweeps < max_iter and step >= min_step and fx > stop:
        improved = False
        for i in range(len(x)):
            for d in (step, -step):
                y = x.copy()
                y[i] += d
                fy = fun(y)
                if fy < fx:
                    x, fx, improved = y, fy, True
                    break
        if not improved:
            step *= shrink
        sweeps += 1
        trace.append(fx)
    return x, fx, trace, sweeps


def _restart_rng(cfg: SearchConfig, r: int) -> random.Random:
    return random.Random(f"polyradon-search:{cfg.seed}:{r}")


def _restart_alpha(cfg: SearchConfig, rng: random.Random) -> Fraction:
    if cfg.alpha is not None:
        return Fraction(cfg.alpha)
    return Fraction(rng.randint(1, 12), rng.choice((2, 3, 4)))


def _free_half(params: Sequence[float]) -> list[Vec2]:
    pts = [Vec2(1.0, params[0])]
    pts += [Vec2(params[i], params[i + 1]) for i in range(1, len(params), 2)]
    return pts


def _apex_half(alpha: float, params: Sequence[float]) -> list[Vec2]:
    return [Vec2(1.0, alpha), Vec2(1.0, -alpha), Vec2(params[0], params[1])]


def _score_half(half: list[Vec2]) -> float:
    try:
        p = polygon_from_half(half, eps_rel=DEFAULT_EPS)
    except InvalidPolygon:
        return math.inf
    return violation_score(p)


def _free_seed(cfg: SearchConfig, rng: random.Random) -> list[float]:
    # a noisy linear image of the regular polygon; only a starting point
    m = cfg.vertices
    base = [(math.cos((2 * j - 1) * math.pi / m), math.sin((2 * j - 1) * math.pi / m))
            for j in range(1, m // 2 + 1)]
    th1, th2 = rng.uniform(0, math.pi), rng.uniform(0, math.pi)
    s1, s2 = rng.uniform(0.6, 1.6), rng.uniform(0.6, 1.6)
    c1, n1, c2, n2 = math.cos(th1), math.sin(th1), math.cos(th2), math.sin(th2)

    def lin(x, y):
        x, y = c2 * x - n2 * y, n2 * x + c2 * y
        x, y = s1 * x, s2 * y
        return c1 * x - n1 * y, n1 * x + c1 * y

    pts = [lin(x, y) for x, y in base]
    pts = [(x + rng.gauss(0, 0.04), y + rng.gauss(0, 0.04)) for x, y in pts]
    full = pts + [(-x, -y) for x, y in pts]
    start = max(range(len(full)), key=lambda i: full[i][0])
    half = [full[(start + i) % len(full)] for i in range(m // 2)]
    x0 = half[0][0]
    half = [(x / x0, y / x0) for x, y in half]
    params = [half[0][1]]
    for x, y in half[1:]:
        params += [x, y]
    return params


def _run_restart(cfg: SearchConfig, r: int):
    rng = _restart_rng(cfg, r)
    if cfg.template == "apex":
        alpha = _restart_alpha(cfg, rng)
        af = float(alpha)
        x0 = [rng.uniform(-0.4, 0.4), af * rng.uniform(1.3, 3.0)]
        fun = lambda q: _score_half(_apex_half(af, q))
    else:
        alpha = None
        fun = lambda q: _score_half(_free_half(q))
        for _ in range(100):
            x0 = _free_seed(cfg, rng)
            if math.isfinite(fun(x0)):
                break
    x, fx, trace, sweeps = pattern_search(fun, x0, cfg.step, cfg.min_step, cfg.shrink,
                                          cfg.max_iter, stop=cfg.tol * 1e-4)
    return r, alpha, x, fx, trace, sweeps


def rationalize(value: float, max_denominator: int = 10**6) -> Fraction:
    return Fraction(value).limit_denominator(max_denominator)


def repair_radon(p: SymPolygon, max_denominator: int = 10**6) -> SymPolygon | None:
    """Snap a near-Radon (4n+2)-gon to an exact rational Radon polygon.

    With ``k = 2n + 1`` vertices per half and shift ``s = n + 1``, a Radon
    polygon satisfies ``v[i+1] - v[i] = a_i v[i+s]`` for every ``i`` (each
    edge is parallel to its translated vertex).  Read off the vertices
    ``v[0]``, ``v[s]`` and the chain coefficients from ``p``, round them to
    rationals, rebuild the chain exactly, and solve the one remaining
    closure equation (linear, since ``cross(v[i], v[i+s])`` is constant
    along the chain) for the last coefficient.  Returns None when the
    result is not a valid polygon.
    """
    k = p.k
    if k % 2 == 0 or k < 3:
        return None
    nn = (k - 1) // 2
    s = nn + 1
    V = [Vec2(float(v.x), float(v.y)) for v in p.vertices]

    def rq(value: float) -> Fraction:
        return rationalize(value, max_denominator)

    def rv(z: Vec2) -> Vec2:
        return Vec2(rq(z.x), rq(z.y))

    def coeff(a: int, b: int, along: int) -> float:
        # least-squares c with V[b] - V[a] = c * V[along]
        d, w = V[b % p.n] - V[a % p.n], V[along % p.n]
        return d.dot(w) / w.dot(w)

    W: list[Vec2 | None] = [None] * k
    W[0], W[s] = rv(V[0]), rv(V[s])
    if nn == 1:
        W[1] = W[0] + W[2]
    else:
        for i in range(nn - 1):
            W[i + 1] = W[i] + rq(coeff(i, i + 1, i + s)) * W[i + s]
            if i <= nn - 3:
                W[i + s + 1] = W[i + s] - rq(-coeff(i + s, i + s + 1, i + 1)) * W[i + 1]
        P, Q = W[2 * nn - 1], W[nn - 1]
        tau = rq(coeff(nn - 1, nn, 2 * nn))
        c_p, c_q = W[0].cross(P), W[0].cross(Q)
        rhs = W[0].cross(Q - W[s])
        if c_q == 0 or tau == 0:
            return None
        u = (rhs + tau * c_p) / c_q
        t = u / tau
        W[2 * nn] = P - t * Q
        W[nn] = Q + tau * W[2 * nn]
    try:
        return polygon_from_half(W)
    except InvalidPolygon:
        return None


def _verify(q: SymPolygon) -> tuple[RadonVerdict, RadonVerdict]:
    return is_radon_tep(q), is_radon_oracle(q)


def _worker_count(cfg: SearchConfig) -> int:
    if cfg.workers is not None:
        return max(1, cfg.workers)
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def search_irregular(cfg: SearchConfig) -> SearchResult:
    """Multi-restart pattern search for irregular Radon (4n+2)-gons.

    Restarts are independent and seeded from ``(cfg.seed, restart)``, so
    the result does not depend on the worker count.  Candidates below
    ``cfg.tol`` are rounded to rationals (repaired if rounding breaks TEP)
    and kept only when both deciders confirm them exactly and they pass
    the irregularity threshold.
    """
    result = SearchResult(cfg)
    if cfg.restarts == 0:
        return result
    workers = min(_worker_count(cfg), cfg.restarts)
    jobs = [(cfg, r) for r in range(cfg.restarts)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_restart, *zip(*jobs)))
    else:
        outcomes = [_run_restart(*job) for job in jobs]

    for r, alpha, x, fx, trace, sweeps in outcomes:
        if not fx < cfg.tol:
            result.log.append(RestartLog(r, fx, sweeps, "no candidate"))
            continue
        if cfg.template == "apex":
            half = [Vec2(Fraction(1), alpha), Vec2(Fraction(1), -alpha),
                    Vec2(rationalize(x[0], cfg.max_denominator), rationalize(x[1], cfg.max_denominator))]
            fhalf = _apex_half(float(alpha), x)
        else:
            fhalf = _free_half(x)
            half = [Vec2(rationalize(v.x, cfg.max_denominator), rationalize(v.y, cfg.max_denominator))
                    for v in fhalf]
        fpoly = polygon_from_half(fhalf, eps_rel=DEFAULT_EPS)
        repaired = False
        try:
            q = polygon_from_half(half)
            tep, orc = _verify(q)
        except InvalidPolygon:
            q, tep, orc = None, None, None
        if (q is None or not (tep.radon and orc.radon)) and cfg.template == "free":
            q = repair_radon(fpoly, cfg.max_denominator)
            repaired = True
            if q is not None:
                tep, orc = _verify(q)
        if q is None or not (tep.radon and orc.radon):
            result.log.append(RestartLog(r, fx, sweeps, "not confirmed exactly"))
            continue
        cv_e, cv_a = irregularity(q)
        if max(cv_e, cv_a) < cfg.irregularity:
            result.log.append(RestartLog(r, fx, sweeps, "regular"))
            continue
        result.log.append(RestartLog(r, fx, sweeps, "found"))
        result.found.append(Found(
            polygon=q,
            float_vertices=tuple(v.to_float() for v in fpoly.vertices),
            restart=r,
            score=fx,
            trace=trace,
            tep=tep,
            oracle=orc,
            cv_edges=cv_e,
            cv_angles=cv_a,
            repaired=repaired,
            alpha=alpha,
            apex=(x[0], x[1]) if cfg.template == "apex" else None,
        ))
    return result
