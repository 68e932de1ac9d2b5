"""Birkhoff-James orthogonality on a polygonal plane.

``x`` is orthogonal to ``y`` when ``||x + t*y|| >= ||x||`` for every real ``t``.
Two independent deciders are provided: one through the supporting
functionals at ``x/||x||``, one straight from the definition by exact
minimization of the piecewise linear function ``t -> ||x + t*y||``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .plane import (
    Functional,
    SpherePoint,
    SymPolygon,
    Vec2,
    angle_cmp,
    classify,
    gauge,
    normalize,
    sphere_intersect_line,
)


class ZeroLeftArgument(ValueError):
    pass


def _is_zero(p: SymPolygon, z: Vec2) -> bool:
    return p.tol.is_zero(z.x) and p.tol.is_zero(z.y)


def _unit(p: SymPolygon, y: Vec2) -> Vec2:
    # signs are invariant under positive scaling; normalizing only matters
    # for the float tolerance
    return y if p.exact else normalize(p, y)


def _check_left(p: SymPolygon, x: Vec2) -> None:
    if _is_zero(p, x):
        raise ZeroLeftArgument("left argument of orthogonality must be nonzero")


@functools.lru_cache(maxsize=4096)
def _support(p: SymPolygon, x: Vec2) -> tuple[Functional, Functional]:
    return classify(p, normalize(p, x)).support


def bj_orthogonal(p: SymPolygon, x: Vec2, y: Vec2) -> bool:
    """Supporting-range test: some supporting functional at x/||x|| kills y.

    The supporting functionals at a sphere point form the segment between
    its two extreme ones ``f`` and ``g``, so the test is ``f(y) g(y) <= 0``.
    """
    _check_left(p, x)
    if _is_zero(p, y):
        return True
    f, g = _support(p, x)
    yn = _unit(p, y)
    return p.tol.sign(f(yn), 0) * p.tol.sign(g(yn), 0) <= 0


def bj_orthogonal_by_definition(p: SymPolygon, x: Vec2, y: Vec2) -> bool:
    """Decide orthogonality from the definition alone, using only the gauge.

    ``phi(t) = ||x + t*y||`` is convex and piecewise linear, with breakpoints
    where ``x + t*y`` crosses a vertex ray.  Zero is a global minimizer iff
    ``phi`` does not drop on either piece adjacent to ``t = 0``, which is
    decided by evaluating ``phi`` at the nearest breakpoint on each side.
    """
    _check_left(p, x)
    if _is_zero(p, y):
        return True
    tol = p.tol
    xn, yn = _unit(p, x), _unit(p, y)
    base = gauge(p, xn)
    right = left = None
    for v in p.vertices:
        c = yn.cross(v)
        if tol.sign(c, 2) == 0:
            continue
        t = -xn.cross(v) / c
        if tol.sign(t, 0) > 0:
            if right is None or t < right:
                right = t
        elif tol.sign(t, 0) < 0:
            if left is None or t > left:
                left = t
    for t in (right, left):
        # a missing side means phi is linear and unbounded there: increasing
        if t is not None and tol.sign(gauge(p, xn + yn * t) - base, 0) < 0:
            return False
    return True


@dataclass(frozen=True)
class OrthoCone:
    """The set ``{y : x is orthogonal to y}`` as a double cone ``K u -K``.

    ``rays`` holds the sphere points on ``ker f`` and ``ker g`` (each an
    antipodal pair).  ``half_rays`` are the two boundary directions of the
    canonical half ``K``: the half containing the boundary ray of smallest
    polar angle.  For a smooth base point both kernels coincide and the
    cone degenerates to a line.
    """

    polygon: SymPolygon
    base: SpherePoint
    f: Functional
    g: Functional
    rays: tuple[tuple[SpherePoint, SpherePoint], tuple[SpherePoint, SpherePoint]]
    half_rays: tuple[Vec2, Vec2]

    @property
    def degenerate(self) -> bool:
        return self.base.is_smooth

    def _signs(self, y: Vec2) -> tuple[int, int]:
        p = self.polygon
        if _is_zero(p, y):
            return 0, 0
        yn = _unit(p, y)
        return p.tol.sign(self.f(yn), 0), p.tol.sign(self.g(yn), 0)

    @functools.cached_property
    def _inner_signs(self) -> tuple[int, int]:
        r0, r1 = self.half_rays
        return self._signs(r0 + r1)

    def contains(self, y: Vec2) -> bool:
        sf, sg = self._signs(y)
        return sf * sg <= 0

    def in_half(self, y: Vec2) -> bool:
        """Membership in the canonical half ``K``."""
        tol = self.polygon.tol
        sf, sg = self._signs(y)
        r0, r1 = self.half_rays
        if self.degenerate:
            return sf == 0 and (_is_zero(self.polygon, y) or tol.sign(r0.dot(_unit(self.polygon, y)), 2) >= 0)
        # K is bounded by r0 and r1 and every point of K has f, g of the
        # signs taken at r0 + r1
        wf, wg = self._inner_signs
        return sf * wf >= 0 and sg * wg >= 0

    def boundary_points(self) -> list[Vec2]:
        return [sp.point for pair in self.rays for sp in pair]


def ortho_cone(p: SymPolygon, x: Vec2) -> OrthoCone:
    _check_left(p, x)
    base = classify(p, normalize(p, x))
    f, g = base.support
    ker_f = sphere_intersect_line(p, f)
    ker_g = ker_f if base.is_smooth else sphere_intersect_line(p, g)
    candidates = [sp.point for sp in ker_f + ker_g]
    first = candidates[0]
    for c in candidates[1:]:
        if angle_cmp(c, first) < 0:
            first = c
    if base.is_smooth:
        half = (first, first)
    else:
        tol = p.tol
        on_f = tol.sign(f(first), 0) == 0
        other_fn, other_pts = (g, ker_g) if on_f else (f, ker_f)
        # f*g <= 0 on K, so K's other boundary ray has the sign of first
        # under the functional that does not vanish at first, flipped
        s = tol.sign(other_fn(first), 0)
        a, b = (sp.point for sp in other_pts)
        here_fn = f if on_f else g
        partner = a if tol.sign(here_fn(a), 0) * s < 0 else b
        half = (first, partner)
    return OrthoCone(p, base, f, g, (ker_f, ker_g), half)
