"""Cevian families of a triangle with divided sides.

Side ``i`` is the side opposite vertex ``A_i`` and is always traversed in
the cyclic direction A2->A3 (i=1), A3->A1 (i=2), A1->A2 (i=3).  A side
split into proportions ``s1 : s2 : ... : sn`` has ``n - 1`` division
points; point ``j`` sits at prefix fraction ``(s1+...+sj) / (s1+...+sn)``
from the side's first endpoint.  Cevian ``(i, j)`` joins ``A_i`` to the
``j``-th division point of side ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import bary
from .bary import A1, A2, A3, BaryLine, BaryPoint
from .errors import IndexOutOfRange, InvalidConfig
from .exact import as_rational

VERTICES = {1: A1, 2: A2, 3: A3}
# (start, end) of the side opposite each vertex
SIDE_ENDPOINTS = {1: (A2, A3), 2: (A3, A1), 3: (A1, A2)}


@dataclass(frozen=True)
class SideDivision:
    proportions: tuple[Fraction, ...]

    def __post_init__(self):
        props = tuple(as_rational(p) for p in self.proportions)
        if not props:
            raise InvalidConfig("a side needs at least one segment")
        if any(p <= 0 for p in props):
            raise InvalidConfig(f"segment proportions must be positive: {props}")
        object.__setattr__(self, "proportions", props)

    @property
    def n_points(self) -> int:
        return len(self.proportions) - 1

    def split(self, j: int) -> tuple[Fraction, Fraction]:
        """(before, after) proportion sums around division point ``j``."""
        if not 1 <= j <= self.n_points:
            raise IndexOutOfRange(
                f"division point {j} does not exist on a side with "
                f"{len(self.proportions)} segment(s)"
            )
        return sum(self.proportions[:j]), sum(self.proportions[j:])


@dataclass(frozen=True)
class CevianId:
    vertex: int
    point_index: int

    def __post_init__(self):
        if self.vertex not in (1, 2, 3):
            raise IndexOutOfRange(f"vertex must be 1, 2 or 3, got {self.vertex}")
        if self.point_index < 1:
            raise IndexOutOfRange(f"point index must be >= 1, got {self.point_index}")

    def __str__(self):
        return f"{self.vertex}:{self.point_index}"


@dataclass(frozen=True)
class TriangleConfig:
    side_divisions: tuple[SideDivision, SideDivision, SideDivision]

    def __post_init__(self):
        sides = tuple(
            s if isinstance(s, SideDivision) else SideDivision(tuple(s))
            for s in self.side_divisions
        )
        if len(sides) != 3:
            raise InvalidConfig(f"need exactly 3 side divisions, got {len(sides)}")
        object.__setattr__(self, "side_divisions", sides)

    @classmethod
    def from_proportions(cls, *sides: Sequence) -> "TriangleConfig":
        return cls(tuple(SideDivision(tuple(s)) for s in sides))

    @classmethod
    def uniform(cls, *proportions) -> "TriangleConfig":
        """Same division on all three sides."""
        return cls.from_proportions(proportions, proportions, proportions)

    @classmethod
    def routh(cls, lam, mu, nu) -> "TriangleConfig":
        """Sides A2A3, A3A1, A1A2 divided in lam:1, mu:1, nu:1."""
        return cls.from_proportions((lam, 1), (mu, 1), (nu, 1))

    def side(self, i: int) -> SideDivision:
        if i not in (1, 2, 3):
            raise IndexOutOfRange(f"side must be 1, 2 or 3, got {i}")
        return self.side_divisions[i - 1]

    def cevians(self) -> Iterator[CevianId]:
        for i in (1, 2, 3):
            for j in range(1, self.side(i).n_points + 1):
                yield CevianId(i, j)


def division_point(cfg: TriangleConfig, side: int, j: int) -> BaryPoint:
    before, after = cfg.side(side).split(j)
    start, end = SIDE_ENDPOINTS[side]
    return bary.divide_segment(start, end, before, after)


def cevian_line(cfg: TriangleConfig, cid: CevianId) -> BaryLine:
    foot = division_point(cfg, cid.vertex, cid.point_index)
    return bary.join(VERTICES[cid.vertex], foot)


def cevian_vertex(cfg: TriangleConfig, c1: CevianId, c2: CevianId) -> BaryPoint:
    return bary.meet(cevian_line(cfg, c1), cevian_line(cfg, c2))


def subpolygon_ratio(cfg: TriangleConfig, vertices: Sequence[tuple[CevianId, CevianId]]) -> Fraction:
    """Area ratio of the polygon whose corners are the listed cevian crossings."""
    return bary.polygon_ratio([cevian_vertex(cfg, a, b) for a, b in vertices])


# Cevians (i, 1) of a Routh configuration.
ROUTH_TRIANGLE = (
    (CevianId(1, 1), CevianId(2, 1)),
    (CevianId(2, 1), CevianId(3, 1)),
    (CevianId(3, 1), CevianId(1, 1)),
)


def routh_triangle_ratio(lam, mu, nu) -> Fraction:
    """Inner triangle cut out by the three cevians of a Routh configuration.

    Concurrent cevians give the degenerate triangle, ratio 0.
    """
    cfg = TriangleConfig.routh(lam, mu, nu)
    return subpolygon_ratio(cfg, ROUTH_TRIANGLE)


def _c(i, j):
    return CevianId(i, j)


# Central hexagon IJKLMN of a 1:lam:1 division, listed counterclockwise in
# the A1=(0,0), A2=(1,0), A3=(0,1) picture.  Consecutive corners share a
# cevian, so each of the six cevians carries exactly one hexagon edge.
HEXAGON = (
    (_c(1, 1), _c(3, 2)),  # I
    (_c(2, 1), _c(3, 2)),  # J
    (_c(2, 1), _c(1, 2)),  # K
    (_c(3, 1), _c(1, 2)),  # L
    (_c(2, 2), _c(3, 1)),  # M
    (_c(1, 1), _c(2, 2)),  # N
)


def hexagon_config(lam) -> TriangleConfig:
    return TriangleConfig.uniform(1, lam, 1)


def hexagon_vertices(lam) -> list[BaryPoint]:
    cfg = hexagon_config(lam)
    return [cevian_vertex(cfg, a, b) for a, b in HEXAGON]


def hexagon_ratio_geometric(lam) -> Fraction:
    lam = as_rational(lam)
    if lam <= 0:
        raise InvalidConfig(f"lambda must be positive, got {lam}")
    return bary.polygon_ratio(hexagon_vertices(lam))
