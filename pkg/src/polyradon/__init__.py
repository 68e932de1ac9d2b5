"""Exact Radon-plane tests for polygonal normed planes."""

from .construct import (
    DegenerateHexagon,
    InvalidConfig,
    InvalidCount,
    SearchConfig,
    SearchResult,
    gen_hexagon,
    gen_regular,
    irregularity,
    random_polygon,
    repair_radon,
    search_irregular,
    violation_score,
)
from .document import DocumentError, build_report, load_polygon, polygon_from_document, serialize
from .ortho import OrthoCone, ZeroLeftArgument, bj_orthogonal, bj_orthogonal_by_definition, ortho_cone
from .plane import (
    CollinearVertex,
    DuplicateVertex,
    Functional,
    InvalidPolygon,
    NotConvex,
    NotOnSphere,
    NotSymmetric,
    OddVertexCount,
    OriginNotInterior,
    SpherePoint,
    SymPolygon,
    Vec2,
    classify,
    edge_functional,
    gauge,
    normalize,
    polygon_from_half,
    sphere_intersect_line,
    validate,
    vec,
)
from .radon import (
    NotRadonInput,
    Parity,
    RadonVerdict,
    check_prop_L_perp,
    check_tep,
    check_tvp,
    is_radon_oracle,
    is_radon_tep,
    parity_vertex_count,
)
from .render import render_svg
from .scalar import EXACT, Tolerance

__version__ = "0.1.0"
