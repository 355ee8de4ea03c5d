"""Homogeneous barycentric points and lines over a reference triangle.

A point ``(t1, t2, t3)`` carries masses at the reference vertices A1, A2, A3;
any nonzero multiple names the same point.  A line ``(u1, u2, u3)`` is the
locus ``u1*t1 + u2*t2 + u3*t3 = 0``.  Join and meet are both cross products.

Signed areas are measured in units of the reference triangle: A1A2A3 has
ratio +1 and the sign of any other triangle follows its row order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CoincidentLines, CoincidentPoints, PointAtInfinity, TooFewVertices
from .exact import as_rational

Triple = tuple[Fraction, Fraction, Fraction]


def _triple(a, b, c) -> Triple:
    return (as_rational(a), as_rational(b), as_rational(c))


def cross(p: Sequence[Fraction], q: Sequence[Fraction]) -> Triple:
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def det3(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a 3x3 matrix given as three rows."""
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _proportional(p: Triple, q: Triple) -> bool:
    return cross(p, q) == (0, 0, 0)


class _Homogeneous:
    __slots__ = ()

    def coords(self) -> Triple:
        raise NotImplementedError

    def __iter__(self):
        return iter(self.coords())

    def __getitem__(self, i):
        return self.coords()[i]

    def __len__(self):
        return 3

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return _proportional(self.coords(), other.coords())

    def __hash__(self):
        # hash a canonical representative: first nonzero coordinate scaled to 1
        c = self.coords()
        lead = next(x for x in c if x != 0)
        return hash((type(self).__name__,) + tuple(x / lead for x in c))

    def scaled(self, s):
        s = as_rational(s)
        if s == 0:
            raise ValueError("scale factor must be nonzero")
        return type(self)(*(s * x for x in self.coords()))


@dataclass(frozen=True, eq=False, init=False)
class BaryPoint(_Homogeneous):
    t1: Fraction
    t2: Fraction
    t3: Fraction

    def __init__(self, t1, t2, t3):
        t = _triple(t1, t2, t3)
        if t == (0, 0, 0):
            raise ValueError("(0, 0, 0) is not a point")
        object.__setattr__(self, "t1", t[0])
        object.__setattr__(self, "t2", t[1])
        object.__setattr__(self, "t3", t[2])

    def coords(self) -> Triple:
        return (self.t1, self.t2, self.t3)

    @property
    def weight(self) -> Fraction:
        return self.t1 + self.t2 + self.t3

    @property
    def is_finite(self) -> bool:
        return self.weight != 0

    def __repr__(self):
        return f"BaryPoint({self.t1}, {self.t2}, {self.t3})"


@dataclass(frozen=True, eq=False, init=False)
class BaryLine(_Homogeneous):
    u1: Fraction
    u2: Fraction
    u3: Fraction

    def __init__(self, u1, u2, u3):
        u = _triple(u1, u2, u3)
        if u == (0, 0, 0):
            raise ValueError("(0, 0, 0) is not a line")
        object.__setattr__(self, "u1", u[0])
        object.__setattr__(self, "u2", u[1])
        object.__setattr__(self, "u3", u[2])

    def coords(self) -> Triple:
        return (self.u1, self.u2, self.u3)

    def __repr__(self):
        return f"BaryLine({self.u1}, {self.u2}, {self.u3})"


@dataclass(frozen=True)
class ArealPoint:
    """Normalized barycentric coordinates; they sum to exactly 1."""

    t1: Fraction
    t2: Fraction
    t3: Fraction

    def __post_init__(self):
        if self.t1 + self.t2 + self.t3 != 1:
            raise ValueError("areal coordinates must sum to 1")

    def coords(self) -> Triple:
        return (self.t1, self.t2, self.t3)

    def as_bary(self) -> BaryPoint:
        return BaryPoint(*self.coords())


A1 = BaryPoint(1, 0, 0)
A2 = BaryPoint(0, 1, 0)
A3 = BaryPoint(0, 0, 1)
CENTROID = BaryPoint(1, 1, 1)


def join(p: BaryPoint, q: BaryPoint) -> BaryLine:
    """Line through two distinct points."""
    u = cross(p.coords(), q.coords())
    if u == (0, 0, 0):
        raise CoincidentPoints(f"{p!r} and {q!r} are the same point")
    return BaryLine(*u)


def meet(l: BaryLine, m: BaryLine) -> BaryPoint:
    """Intersection of two distinct lines (possibly at infinity)."""
    t = cross(l.coords(), m.coords())
    if t == (0, 0, 0):
        raise CoincidentLines(f"{l!r} and {m!r} are the same line")
    return BaryPoint(*t)


def on_line(p: BaryPoint, l: BaryLine) -> bool:
    return sum(u * t for u, t in zip(l.coords(), p.coords())) == 0


def normalize(p: BaryPoint) -> ArealPoint:
    w = p.weight
    if w == 0:
        raise PointAtInfinity(f"{p!r} has zero coordinate sum")
    return ArealPoint(p.t1 / w, p.t2 / w, p.t3 / w)


def divide_segment(p: BaryPoint, q: BaryPoint, a, b) -> BaryPoint:
    """Point dividing P->Q in the ratio a : b (measured from P).

    Negative ``a`` or ``b`` gives an external division.
    """
    a, b = as_rational(a), as_rational(b)
    if a == 0 and b == 0:
        raise ValueError("ratio 0:0 is undefined")
    pn, qn = normalize(p).coords(), normalize(q).coords()
    return BaryPoint(*(b * x + a * y for x, y in zip(pn, qn)))


def triangle_ratio_signed(p1: BaryPoint, p2: BaryPoint, p3: BaryPoint) -> Fraction:
    """Signed area(P1P2P3) / area(A1A2A3).

    The determinant of the unnormalized rows divided by the product of the
    row sums, so callers may pass any representative of each point.
    """
    weights = []
    for p in (p1, p2, p3):
        if p.weight == 0:
            raise PointAtInfinity(f"{p!r} has zero coordinate sum")
        weights.append(p.weight)
    d = det3([p1.coords(), p2.coords(), p3.coords()])
    return d / (weights[0] * weights[1] * weights[2])


def polygon_ratio_signed(vertices: Sequence[BaryPoint]) -> Fraction:
    """Fan-triangulated signed area; positive for A1A2A3 orientation."""
    if len(vertices) < 3:
        raise TooFewVertices(f"a polygon needs 3 vertices, got {len(vertices)}")
    v0 = vertices[0]
    return sum(
        (triangle_ratio_signed(v0, vertices[i], vertices[i + 1])
         for i in range(1, len(vertices) - 1)),
        Fraction(0),
    )


def polygon_ratio(vertices: Sequence[BaryPoint]) -> Fraction:
    """area(polygon) / area(reference triangle), for a simple polygon in
    either orientation."""
    return abs(polygon_ratio_signed(vertices))
