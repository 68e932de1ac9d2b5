import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyradon import (
    NotRadonInput,
    Parity,
    Vec2,
    bj_orthogonal,
    check_prop_L_perp,
    check_tep,
    check_tvp,
    gen_hexagon,
    gen_regular,
    is_radon_oracle,
    is_radon_tep,
    parity_vertex_count,
    validate,
)
from polyradon.radon import TepFailure, TepRecord

HEX = validate([(1, 1), (0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1)])
SQUARE = validate([(1, 1), (-1, 1), (-1, -1), (1, -1)])


def v(x, y):
    return Vec2(F(x), F(y))


def edge_index(p, a, b):
    return next(e.index for e in p.edges() if {e.start, e.end} == {a, b})


def test_tvp_examples():
    t = check_tvp(HEX, edge_index(HEX, v(1, -1), v(1, 1)))
    assert t.holds and set(t.translated_vertices) == {v(0, 2), v(0, -2)}
    s = check_tvp(SQUARE, edge_index(SQUARE, v(1, -1), v(1, 1)))
    assert not s.holds and {z.point for z in s.landing} == {v(0, 1), v(0, -1)}
    deca = gen_regular(10)
    assert all(check_tvp(deca, i).holds for i in range(10))


def test_tep_hexagon_pair():
    i = edge_index(HEX, v(1, -1), v(1, 1))
    r = check_tep(HEX, i)
    assert isinstance(r, TepRecord)
    assert HEX.vertex(r.v) == v(0, 2) and HEX.vertex(r.w) in (v(1, -1), v(-1, 1))
    # w is stored as the representative of the pair +-w, which fixes the label
    assert r.label == ("vw" if HEX.vertex(r.w) == v(-1, 1) else "v(-w)")
    assert {HEX.vertex(j) for j in r.segment} == {v(0, 2), v(-1, 1)}
    assert HEX.same_class(r.x, HEX.vertex_index(v(1, 1)))


def test_tep_failures():
    for i in range(2):
        r = check_tep(SQUARE, i)
        assert isinstance(r, TepFailure) and r.clause == "i"
    bent = validate([(1, 1), (0, F(19, 10)), (-1, 1), (-1, -1), (0, F(-19, 10)), (1, -1)])
    i = edge_index(bent, v(1, -1), v(1, 1))
    assert check_tvp(bent, i).holds
    assert isinstance(check_tep(bent, i), TepFailure)


@pytest.mark.parametrize("decide", [is_radon_tep, is_radon_oracle])
def test_square_witness(decide):
    r = decide(SQUARE)
    assert not r.radon and not r
    assert r.witness == (v(1, 1), v(0, 1))


@pytest.mark.parametrize("decide", [is_radon_tep, is_radon_oracle])
def test_verdicts(decide):
    assert decide(HEX).radon
    assert not decide(gen_regular(8)).radon
    assert not decide(validate([(1, 1), (0, F(5, 2)), (-1, 1), (-1, -1), (0, F(-5, 2)), (1, -1)])).radon
    assert not decide(gen_hexagon(1, apex_scale=3)).radon


def test_certificate_covers_half_the_pairs():
    r = is_radon_tep(HEX)
    assert len(r.certificate) == HEX.k
    assert [c.pair[0] for c in r.certificate] == list(range(HEX.k))


def test_prop_l_perp():
    i = edge_index(HEX, v(1, -1), v(1, 1))
    assert check_prop_L_perp(HEX, i)
    deca = gen_regular(10)
    assert all(check_prop_L_perp(deca, i) for i in range(10))
    with pytest.raises(NotRadonInput):
        check_prop_L_perp(SQUARE, 0)


def test_parity():
    assert parity_vertex_count(SQUARE) is Parity.FOUR_N
    assert parity_vertex_count(HEX) is Parity.FOUR_N_PLUS_TWO
    assert parity_vertex_count(gen_regular(12)) is Parity.FOUR_N


small = st.integers(-4, 4)


@settings(max_examples=60, deadline=None)
@given(small, small, small, small,
       st.sampled_from([F(1, 4), F(1, 3), F(1, 2), F(1), F(3, 2), F(2)]),
       st.sampled_from(["vertical", "horizontal"]),
       st.sampled_from([F(3, 2), F(2), F(9, 4)]))
def test_linear_images_keep_the_verdict(a, b, c, d, alpha, apex, scale):
    # a linear bijection is an isometry onto the image norm, so both the
    # verdict and the agreement of the two deciders must survive it
    if a * d - b * c == 0:
        return
    p = gen_hexagon(alpha, apex, scale)
    q = validate([Vec2(a * z.x + b * z.y, c * z.x + d * z.y) for z in p.vertices])
    want = scale == 2
    assert is_radon_tep(q).radon == is_radon_oracle(q).radon == want


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_witnesses_reverify(seed):
    from polyradon import random_polygon
    p = random_polygon(random.Random(seed), max_vertices=20)
    for r in (is_radon_tep(p), is_radon_oracle(p)):
        if not r.radon:
            x, y = r.witness
            assert bj_orthogonal(p, x, y) and not bj_orthogonal(p, y, x)


def _certified():
    out = [gen_hexagon(a, apex) for a in (F(1, 3), F(1), F(5, 2)) for apex in ("vertical", "horizontal")]
    out += [gen_regular(m) for m in (6, 10, 14, 18)]
    return out


def test_certificates_reverify():
    for p in _certified():
        r = is_radon_tep(p)
        assert r.radon
        for rec in r.certificate:
            a, b = rec.segment
            assert (b - a) % p.n == 1
            assert rec.edge == a
            assert check_tvp(p, rec.edge).holds and p.same_class(rec.x, rec.common)


def test_radon_polygons_are_symmetric_on_critical_pairs():
    for p in _certified():
        pts = list(p.vertices) + [e.midpoint for e in p.edges()]
        for a in pts:
            for b in pts:
                assert bj_orthogonal(p, a, b) == bj_orthogonal(p, b, a)
