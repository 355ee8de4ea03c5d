"""Deterministic SVG drawings of the figures.

Triangles are drawn at A1=(0,0), A2=(1,0), A3=(0,1); parallelograms as the
unit square with B at the origin.  Coordinates are the only place exact
values are turned into decimals (6 places), so identical inputs give
byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from . import parallelogram as pg
from .bary import A1, A2, A3, BaryPoint
from .exact import as_rational, render, to_decimal
from .triangle import (
    HEXAGON,
    ROUTH_TRIANGLE,
    TriangleConfig,
    VERTICES,
    cevian_vertex,
    division_point,
    hexagon_config,
)

SIZE = 400
MARGIN = 40
SCALE = SIZE - 2 * MARGIN

Corner = tuple[Fraction, Fraction]
TRIANGLE_CORNERS: tuple[Corner, Corner, Corner] = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
# reference corners (C, A, B) of the parallelogram
SQUARE_CORNERS: tuple[Corner, Corner, Corner] = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)), (Fraction(0), Fraction(0)))


@dataclass
class Drawing:
    """Everything needed to render one figure, in picture coordinates."""

    title: str
    outline: list[Corner]
    cevians: list[tuple[Corner, Corner]] = field(default_factory=list)
    highlight: list[Corner] = field(default_factory=list)
    labels: list[tuple[str, Corner]] = field(default_factory=list)
    caption: str = ""


def _picture(p: BaryPoint, corners=TRIANGLE_CORNERS) -> Corner:
    w = p.weight
    return (
        sum((t * c[0] for t, c in zip(p, corners)), Fraction(0)) / w,
        sum((t * c[1] for t, c in zip(p, corners)), Fraction(0)) / w,
    )


def _xy(c: Corner) -> tuple[str, str]:
    return to_decimal(MARGIN + SCALE * c[0]), to_decimal(SIZE - MARGIN - SCALE * c[1])


def triangle_drawing(cfg: TriangleConfig, highlight: Sequence[BaryPoint] = (),
                     highlight_labels: Sequence[str] = (), title: str = "triangle") -> Drawing:
    d = Drawing(title=title, outline=[_picture(v) for v in (A1, A2, A3)])
    d.labels = [("A1", d.outline[0]), ("A2", d.outline[1]), ("A3", d.outline[2])]
    for cid in cfg.cevians():
        foot = division_point(cfg, cid.vertex, cid.point_index)
        d.cevians.append((_picture(VERTICES[cid.vertex]), _picture(foot)))
    d.highlight = [_picture(p) for p in highlight]
    d.labels += [(name, _picture(p)) for name, p in zip(highlight_labels, highlight)]
    return d


def routh_drawing(lam, mu, nu) -> Drawing:
    lam, mu, nu = (as_rational(x) for x in (lam, mu, nu))
    cfg = TriangleConfig.routh(lam, mu, nu)
    pts = [cevian_vertex(cfg, a, b) for a, b in ROUTH_TRIANGLE]
    if any(not p.is_finite for p in pts):
        pts = []
    d = triangle_drawing(cfg, pts, title="routh")
    d.caption = f"sides divided {render(lam)}:1, {render(mu)}:1, {render(nu)}:1"
    return d


def hexagon_drawing(lam) -> Drawing:
    lam = as_rational(lam)
    cfg = hexagon_config(lam)
    pts = [cevian_vertex(cfg, a, b) for a, b in HEXAGON]
    d = triangle_drawing(cfg, pts, "IJKLMN", title="hexagon")
    d.caption = f"each side divided 1:{render(lam)}:1"
    return d


def parallelogram_drawing(cfg: pg.ParallelogramConfig) -> Drawing:
    fig = pg.build_figure(cfg)

    def pic(p):
        return _picture(p, SQUARE_CORNERS)

    d = Drawing(title="parallelogram", outline=[pic(p) for p in fig.corners])
    d.labels = list(zip("ABCD", d.outline))
    for apex, foot in ((fig.A, fig.K), (fig.B, fig.L), (fig.C, fig.M), (fig.D, fig.N)):
        d.cevians.append((pic(apex), pic(foot)))
    d.highlight = [pic(p) for p in fig.quadrilateral]
    d.labels += list(zip("XYZW", d.highlight))
    d.caption = "sides divided " + ", ".join(f"{render(x)}:1" for x in cfg.as_tuple())
    return d


def to_svg(d: Drawing) -> str:
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{escape(d.title)}</title>",
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
    ]

    def pts(cs):
        return " ".join(",".join(_xy(c)) for c in cs)

    if d.highlight:
        out.append(f'<polygon class="highlight" points="{pts(d.highlight)}" '
                   'fill="#f4b942" fill-opacity="0.6" stroke="none"/>')
    out.append(f'<polygon class="outline" points="{pts(d.outline)}" '
               'fill="none" stroke="#000000" stroke-width="2"/>')
    for a, b in d.cevians:
        (x1, y1), (x2, y2) = _xy(a), _xy(b)
        out.append(f'<line class="cevian" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                   'stroke="#1f4e9c" stroke-width="1"/>')
    for name, c in d.labels:
        x, y = _xy(c)
        out.append(f'<text class="label" x="{x}" y="{y}" font-size="12" '
                   f'font-family="sans-serif">{escape(name)}</text>')
    if d.caption:
        out.append(f'<text class="caption" x="{MARGIN}" y="{SIZE - 10}" font-size="12" '
                   f'font-family="sans-serif">{escape(d.caption)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(d: Drawing, path) -> Path:
    path = Path(path)
    path.write_text(to_svg(d), encoding="utf-8", newline="\n")
    return path
