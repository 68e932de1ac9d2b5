"""Polygonal unit spheres: validation, gauge norm, and point classification."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import DEFAULT_EPS, Scalar, Tolerance, is_exact_number


class InvalidPolygon(ValueError):
    pass


class NotSymmetric(InvalidPolygon):
    pass


class NotConvex(InvalidPolygon):
    pass


class OriginNotInterior(InvalidPolygon):
    pass


class CollinearVertex(InvalidPolygon):
    pass


class DuplicateVertex(InvalidPolygon):
    pass


class OddVertexCount(InvalidPolygon):
    pass


class NotOnSphere(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Vec2:
    x: Scalar
    y: Scalar

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __mul__(self, c: Scalar) -> Vec2:
        return Vec2(self.x * c, self.y * c)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> Vec2:
        return Vec2(self.x / c, self.y / c)

    def cross(self, other: Vec2) -> Scalar:
        return self.x * other.y - self.y * other.x

    def dot(self, other: Vec2) -> Scalar:
        return self.x * other.x + self.y * other.y

    def norm(self) -> float:
        return float(self.x * self.x + self.y * self.y) ** 0.5

    def to_float(self) -> tuple[float, float]:
        return float(self.x), float(self.y)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __repr__(self) -> str:
        return f"({_fmt(self.x)}, {_fmt(self.y)})"


def _fmt(v: Scalar) -> str:
    if isinstance(v, Fraction):
        return str(v)
    return f"{v:.12g}"


def vec(x, y) -> Vec2:
    return Vec2(x, y)


@dataclass(frozen=True, slots=True)
class Functional:
    """Linear functional ``(x, y) -> a*x + b*y``."""

    a: Scalar
    b: Scalar

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("zero functional")

    def __call__(self, z: Vec2) -> Scalar:
        return self.a * z.x + self.b * z.y

    def __neg__(self) -> Functional:
        return Functional(-self.a, -self.b)

    def kernel_direction(self) -> Vec2:
        return Vec2(-self.b, self.a)

    def __repr__(self) -> str:
        return f"Functional({_fmt(self.a)}, {_fmt(self.b)})"


def _half(v: Vec2) -> int:
    # 0 for polar angle in [0, pi), 1 for [pi, 2*pi)
    return 0 if (v.y > 0 or (v.y == 0 and v.x > 0)) else 1


def angle_cmp(u: Vec2, v: Vec2) -> int:
    """Exact comparison of polar angles in [0, 2*pi); ties broken by length."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = u.cross(v)
    if c > 0:
        return -1
    if c < 0:
        return 1
    nu, nv = u.dot(u), v.dot(v)
    return (nu > nv) - (nu < nv)


angle_key = functools.cmp_to_key(angle_cmp)


@dataclass(frozen=True)
class Edge:
    index: int
    start: Vec2
    end: Vec2
    functional: Functional

    @property
    def midpoint(self) -> Vec2:
        return (self.start + self.end) / 2


@dataclass(frozen=True)
class SymPolygon:
    """Validated centrally symmetric convex polygon, counterclockwise.

    Build instances with :func:`validate`.  Edge ``i`` runs from
    ``vertices[i]`` to ``vertices[i + 1]`` (indices mod ``n``), and
    ``vertices[i + k] == -vertices[i]`` with ``k = n // 2``.
    """

    vertices: tuple[Vec2, ...]
    tol: Tolerance
    functionals: tuple[Functional, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def k(self) -> int:
        return len(self.vertices) // 2

    @property
    def exact(self) -> bool:
        return self.tol.exact

    @property
    def mode(self) -> str:
        return "exact" if self.tol.exact else "float"

    def vertex(self, i: int) -> Vec2:
        return self.vertices[i % self.n]

    def edge(self, i: int) -> Edge:
        i %= self.n
        return Edge(i, self.vertices[i], self.vertices[(i + 1) % self.n], self.functionals[i])

    def edges(self) -> list[Edge]:
        return [self.edge(i) for i in range(self.n)]

    def half_vertices(self) -> tuple[Vec2, ...]:
        return self.vertices[: self.k]

    def antipode(self, i: int) -> int:
        return (i + self.k) % self.n

    def vertex_index(self, z: Vec2) -> int | None:
        """Index of the vertex equal to ``z`` (within tolerance), if any."""
        for i, v in enumerate(self.vertices):
            if self.tol.is_zero(v.x - z.x) and self.tol.is_zero(v.y - z.y):
                return i
        return None

    def same_class(self, i: int, j: int) -> bool:
        """True when vertices ``i`` and ``j`` are equal or antipodal."""
        return (i - j) % self.k == 0


def _solve_edge_functional(u: Vec2, v: Vec2) -> Functional:
    det = u.cross(v)
    return Functional((v.y - u.y) / det, (u.x - v.x) / det)


def validate(raw: Iterable, tol: Tolerance | None = None, eps_rel: float | None = None) -> SymPolygon:
    """Validate and normalize a vertex list into a :class:`SymPolygon`.

    The mode is exact when every coordinate is an int or Fraction and no
    float tolerance is requested; otherwise float mode with ``eps_rel``
    (default 1e-9).  Vertices may come in any order.
    """
    pts = [p if isinstance(p, Vec2) else Vec2(*p) for p in raw]
    if not pts:
        raise InvalidPolygon("empty vertex list")

    exact = all(is_exact_number(c) for p in pts for c in (p.x, p.y))
    if tol is not None:
        exact = tol.exact
        eps = tol.eps_rel
    else:
        eps = 0.0 if (exact and eps_rel is None) else (DEFAULT_EPS if eps_rel is None else eps_rel)
        exact = eps == 0
    if exact:
        pts = [Vec2(Fraction(p.x), Fraction(p.y)) for p in pts]
    else:
        pts = [Vec2(float(p.x), float(p.y)) for p in pts]
    scale = max(max(abs(float(p.x)), abs(float(p.y))) for p in pts)
    if scale == 0:
        raise OriginNotInterior("all vertices are at the origin")
    tol = Tolerance(0.0 if exact else eps, scale)

    if len(pts) % 2:
        raise OddVertexCount(f"{len(pts)} vertices; a centrally symmetric polygon has an even count")
    for i in range(len(pts)):
        for j in range(i):
            if tol.is_zero(pts[i].x - pts[j].x) and tol.is_zero(pts[i].y - pts[j].y):
                raise DuplicateVertex(f"vertex {pts[i]!r} repeated")
    for p in pts:
        if tol.is_zero(p.x) and tol.is_zero(p.y):
            raise OriginNotInterior("origin listed as a vertex")

    pts.sort(key=angle_key)
    n = len(pts)
    k = n // 2
    for i in range(k):
        a, b = pts[i], pts[i + k]
        if not (tol.is_zero(a.x + b.x) and tol.is_zero(a.y + b.y)):
            raise NotSymmetric(f"{a!r} has no antipodal vertex")

    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        c = tol.sign(a.cross(b), 2)
        if c <= 0:
            if c == 0 and tol.sign(a.dot(b), 2) > 0:
                raise NotConvex(f"{a!r} and {b!r} lie on one ray from the origin")
            raise OriginNotInterior("origin is not strictly inside the polygon")

    for i in range(n):
        prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % n]
        turn = tol.sign((cur - prev).cross(nxt - cur), 2)
        if turn == 0:
            raise CollinearVertex(f"{cur!r} is not an extreme point")
        if turn < 0:
            raise NotConvex(f"reflex angle at {cur!r}")

    funcs = tuple(_solve_edge_functional(pts[i], pts[(i + 1) % n]) for i in range(n))
    return SymPolygon(tuple(pts), tol, funcs)


def edge_functional(p: SymPolygon, i: int) -> Functional:
    """Extreme supporting functional of edge ``i``: equals 1 on both endpoints."""
    return p.functionals[i % p.n]


def gauge(p: SymPolygon, z: Vec2) -> Scalar:
    """Norm of ``z``: the ball is the intersection of the half-planes ``f_i <= 1``."""
    return max(f(z) for f in p.functionals)


@dataclass(frozen=True)
class SpherePoint:
    """A point of the unit sphere with its supporting functionals.

    ``kind`` is ``"vertex"`` (``index`` is the vertex index) or ``"smooth"``
    (``index`` is the edge containing the point).  ``support`` holds the two
    extreme supporting functionals (equal for smooth points); any supporting
    functional is a convex combination of them.
    """

    point: Vec2
    kind: str
    index: int
    support: tuple[Functional, Functional]

    @property
    def is_vertex(self) -> bool:
        return self.kind == "vertex"

    @property
    def is_smooth(self) -> bool:
        return self.kind == "smooth"


def _vertex_point(p: SymPolygon, i: int) -> SpherePoint:
    i %= p.n
    return SpherePoint(p.vertices[i], "vertex", i, (p.functionals[i - 1], p.functionals[i]))


def classify(p: SymPolygon, z: Vec2) -> SpherePoint:
    """Classify a sphere point as a vertex or a smooth point of one edge.

    In float mode a point within tolerance of a vertex is snapped to it.
    """
    tol = p.tol
    vals = [f(z) for f in p.functionals]
    best = max(range(p.n), key=vals.__getitem__)
    if tol.sign(vals[best] - 1, 0) != 0:
        raise NotOnSphere(f"{z!r} has norm {vals[best]}")
    before, after = (best - 1) % p.n, (best + 1) % p.n
    on_before = tol.sign(vals[before] - 1, 0) == 0
    on_after = tol.sign(vals[after] - 1, 0) == 0
    if on_before and on_after:
        # only reachable in float mode on tiny edges
        on_before = vals[before] >= vals[after]
        on_after = not on_before
    if on_before:
        return _vertex_point(p, best)
    if on_after:
        return _vertex_point(p, after)
    return SpherePoint(z, "smooth", best, (p.functionals[best], p.functionals[best]))


def normalize(p: SymPolygon, z: Vec2) -> Vec2:
    if z.is_zero():
        raise ValueError("cannot normalize the zero vector")
    return z / gauge(p, z)


def sphere_intersect_line(p: SymPolygon, f: Functional) -> tuple[SpherePoint, SpherePoint]:
    """The two antipodal sphere points on the line ``f = 0``.

    The first point lies in the direction ``(-b, a)``.
    """
    z = normalize(p, f.kernel_direction())
    first = classify(p, z)
    if first.is_vertex:
        second = _vertex_point(p, p.antipode(first.index))
    else:
        second = classify(p, -first.point)
    return first, second


def polygon_from_half(half: Sequence, **kwargs) -> SymPolygon:
    """Validate the polygon whose vertices are ``half`` and their negatives."""
    pts = [p if isinstance(p, Vec2) else Vec2(*p) for p in half]
    return validate(pts + [-q for q in pts], **kwargs)
