"""Acceptance criteria, one test per criterion (summary printed at the end of the run)."""

import contextlib
import io
import math
import random
from fractions import Fraction


from polyradon import (
    SearchConfig,
    Vec2,
    bj_orthogonal,
    bj_orthogonal_by_definition,
    check_prop_L_perp,
    check_tvp,
    edge_functional,
    gen_hexagon,
    gen_regular,
    irregularity,
    is_radon_oracle,
    is_radon_tep,
    load_polygon,
    ortho_cone,
    render_svg,
    search_irregular,
    serialize,
    sphere_intersect_line,
)
from polyradon.cli import main

ALPHAS = [Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)]
SCALES = [Fraction(3, 2), Fraction(2), Fraction(5, 2)]


def hexagon_grid():
    for a in ALPHAS:
        for apex in ("vertical", "horizontal"):
            for s in SCALES:
                yield a, apex, s, gen_hexagon(a, apex, s)


def both(p):
    return is_radon_tep(p), is_radon_oracle(p)


def test_c01_hexagon_family_exactness():
    bad = []
    for a, apex, s, p in hexagon_grid():
        assert p.exact and p.tol.eps_rel == 0
        tep, orc = both(p)
        want = s == 2
        if tep.radon != want or orc.radon != want:
            bad.append((a, apex, s, tep.radon, orc.radon))
    assert bad == []


def test_c02_parity_sweep():
    bad = []
    for m in range(4, 41, 2):
        p = gen_regular(m, eps_rel=1e-9)
        assert not p.exact
        tep, orc = both(p)
        want = m % 4 == 2
        if tep.radon != want or orc.radon != want:
            bad.append((m, tep.radon, orc.radon))
    assert bad == []


def test_c03_regular_hexagon_check():
    p = gen_hexagon(1 / math.sqrt(3), "vertical", 2, eps_rel=1e-9)
    assert all(v.radon for v in both(p))
    cv_e, cv_a = irregularity(p)
    assert cv_e < 1e-9
    assert cv_a < 1e-9
    q = gen_hexagon(Fraction(1, 2), "vertical", 2)
    assert all(v.radon for v in both(q))
    assert irregularity(q)[0] > 0.05


def test_c04_oracle_equivalence(random_polygons):
    counts = sorted({p.n for p in random_polygons})
    assert counts[0] == 4 and counts[-1] == 30
    assert all(p.exact for p in random_polygons)
    mismatched = [i for i, p in enumerate(random_polygons)
                  if is_radon_tep(p).radon != is_radon_oracle(p).radon]
    assert mismatched == []


def test_c05_four_n_obstruction(random_polygons):
    fours = [p for p in random_polygons if p.n % 4 == 0]
    assert len(fours) > 300
    for p in fours:
        for verdict in both(p):
            assert not verdict.radon
            x, y = verdict.witness
            assert bj_orthogonal(p, x, y)
            assert not bj_orthogonal(p, y, x)


_pools: dict[int, list] = {}


def _sample_points(p, rng, count):
    """Vertices, edge midpoints, kernel landing points and random points."""
    pool = _pools.get(id(p))
    if pool is None:
        pool = list(p.vertices) + [e.midpoint for e in p.edges()]
        for i in range(p.n):
            pool += [sp.point for sp in sphere_intersect_line(p, edge_functional(p, i))]
        _pools[id(p)] = pool
    out = []
    for _ in range(count):
        kind = rng.random()
        if kind < 0.75:
            z = rng.choice(pool)
        else:
            z = Vec2(Fraction(rng.randint(-50, 50), 25), Fraction(rng.randint(-50, 50), 25))
            if not p.exact:
                z = Vec2(float(z.x), float(z.y))
        out.append(z)
    return out


def _ortho_polygons(random_polygons):
    polys = random_polygons[:60]
    polys += [gen_regular(m, eps_rel=1e-9) for m in (6, 8, 10, 12, 14)]
    polys += [p for *_, p in hexagon_grid()][::4]
    return polys


def test_c06_orthogonality_methods_agree(random_polygons):
    rng = random.Random(6)
    polys = _ortho_polygons(random_polygons)
    triples = []
    while len(triples) < 10_000:
        p = rng.choice(polys)
        x, y = _sample_points(p, rng, 2)
        if x.is_zero():
            continue
        triples.append((p, x, y))
    disagree = [(p.vertices, x, y) for p, x, y in triples
                if bj_orthogonal(p, x, y) != bj_orthogonal_by_definition(p, x, y)]
    assert disagree == []
    scales = [Fraction(1, 3), Fraction(2), Fraction(-1), Fraction(-5, 2), Fraction(7, 4)]
    broken = []
    for p, x, y in triples[:1000]:
        a, b = rng.choice(scales), rng.choice(scales)
        if not p.exact:
            a, b = float(a), float(b)
        if bj_orthogonal(p, x * a, y * b) != bj_orthogonal(p, x, y):
            broken.append((p.vertices, x, y, a, b))
    assert broken == []


def test_c07_cone_axioms(random_polygons):
    rng = random.Random(7)
    polys = _ortho_polygons(random_polygons)
    for _ in range(100):
        p = rng.choice(polys)
        x = _sample_points(p, rng, 1)[0]
        if x.is_zero():
            x = p.vertex(0)
        cone = ortho_cone(p, x)
        r0, r1 = cone.half_rays
        assert cone.in_half(r0) and cone.in_half(r1)

        def member():
            a = Fraction(rng.randint(0, 20), 10)
            b = Fraction(0) if cone.degenerate else Fraction(rng.randint(0, 20), 10)
            if not p.exact:
                a, b = float(a), float(b)
            return r0 * a + r1 * b

        for _ in range(100):
            y1, y2 = member(), member()
            assert cone.in_half(y1) and cone.contains(y1)
            assert bj_orthogonal(p, x, y1)
            assert cone.in_half(y1 + y2)
            for c in (0, Fraction(1, 2), 2):
                assert cone.in_half(y1 * (c if p.exact else float(c)))
            if not y1.is_zero():
                assert not cone.in_half(-y1)
        for z in _sample_points(p, rng, 100):
            if cone.in_half(z) and cone.in_half(-z):
                assert z.is_zero()
            assert cone.contains(z) == bj_orthogonal(p, x, z)


def test_c08_translated_vertex_cone_is_edge(random_polygons):
    certified = [p for *_, p in hexagon_grid()]
    certified += [gen_regular(m, eps_rel=1e-9) for m in range(4, 41, 2)]
    certified += [gen_hexagon(1 / math.sqrt(3), eps_rel=1e-9), gen_hexagon(Fraction(1, 2))]
    certified += random_polygons
    checked = 0
    for p in certified:
        verdict = is_radon_tep(p)
        if not verdict.radon:
            continue
        for i in range(p.n):
            assert check_tvp(p, i).holds
            assert check_prop_L_perp(p, i, verdict), (p.vertices, i)
            checked += 1
    assert checked > 100


def test_c09_search_sanity():
    res = search_irregular(SearchConfig(vertices=6, seed=7, template="apex"))
    assert res.found
    for f in res.found:
        assert abs(f.apex_scale - 2) < 1e-6
        assert is_radon_tep(f.polygon).radon and is_radon_oracle(f.polygon).radon
        assert f.polygon.exact
    free = search_irregular(SearchConfig(vertices=10, seed=3, restarts=4))
    for f in free.found:
        q = f.polygon
        assert q.exact and q.n == 10
        assert is_radon_tep(q).radon and is_radon_oracle(q).radon
        assert max(irregularity(q)) >= free.config.irregularity


def _run(args):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(args)
    return code, out.getvalue(), err.getvalue()


def test_c10_cli_contract(corpus_dir, manifest, tmp_path):
    required = {"square.json", "diamond.json", "regular_6.json", "regular_8.json",
                "regular_10.json", "regular_12.json"}
    assert required <= set(manifest)
    assert sum(name.startswith("hexagon_") for name in manifest) == 42
    for name, code in manifest.items():
        path = str(corpus_dir / name)
        assert _run(["check", path])[0] == code, name
        assert _run(["check", "--oracle", path])[0] == code, name
        if code == 2:
            continue
        text = (corpus_dir / name).read_text()
        p = load_polygon(corpus_dir / name)
        if p.exact:
            assert serialize(p) == text
            assert serialize(load_polygon(corpus_dir / name)) == serialize(p)
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        assert _run(["render", path, "-o", str(a), "--show-cones", "--show-kernels"])[0] == 0
        assert _run(["render", path, "-o", str(b), "--show-cones", "--show-kernels"])[0] == 0
        assert a.read_bytes() == b.read_bytes()
        assert render_svg(p) == render_svg(p)
    code, out, _ = _run(["check", str(corpus_dir / "square.json")])
    assert code == 1 and "(1, 1)" in out and "(0, 1)" in out
    assert _run(["search", "--vertices", "8"])[0] == 2
    assert _run(["gen", "regular", "--vertices", "7"])[0] == 2
