"""Exact area ratios of polygons cut out by cevians in triangles and
parallelograms, computed with barycentric coordinates over the rationals."""

from .arrangement import Arrangement, build_arrangement, face_ratios
from .bary import (
    ArealPoint,
    BaryLine,
    BaryPoint,
    divide_segment,
    join,
    meet,
    normalize,
    on_line,
    polygon_ratio,
    triangle_ratio_signed,
)
from .closed_forms import (
    RouthParams,
    corollary_formula,
    even_case_formula,
    hexagon_formula,
    morgan_formula,
    routh_formula,
)
from .exact import Rational, parse_rational, rational_arith, render
from .parallelogram import (
    ParallelogramConfig,
    build_figure,
    eval_eq1,
    eval_r1_r2,
    quadrilateral_ratio_geometric,
)
from .triangle import (
    CevianId,
    SideDivision,
    TriangleConfig,
    cevian_line,
    cevian_vertex,
    division_point,
    hexagon_ratio_geometric,
    routh_triangle_ratio,
    subpolygon_ratio,
)

__version__ = "0.1.0"
