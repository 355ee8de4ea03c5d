"""Cartesian brute-force oracle.

Everything here is recomputed from scratch in an affine picture of the
figure: section formula for division points, Cramer's rule for line
crossings, the shoelace formula for areas, and repeated convex-polygon
splitting for whole arrangements.  The only thing shared with the
barycentric engine is the ``Fraction`` scalar, so agreement between the two
is evidence rather than a tautology.

``verify_invariance`` is the bridge: it asks the engine for a ratio and
checks that the oracle finds the same exact value under many random
rational embeddings.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import DegenerateReference, MismatchFound, PointAtInfinity
from .exact import as_rational, render


@dataclass(frozen=True)
class CartesianPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __add__(self, o):
        return CartesianPoint(self.x + o.x, self.y + o.y)

    def __sub__(self, o):
        return CartesianPoint(self.x - o.x, self.y - o.y)

    def scale(self, s) -> "CartesianPoint":
        return CartesianPoint(self.x * s, self.y * s)

    def as_strings(self) -> list[str]:
        return [render(self.x), render(self.y)]


P = CartesianPoint


def cross(o: CartesianPoint, a: CartesianPoint, b: CartesianPoint) -> Fraction:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def signed_area2(poly: Sequence[CartesianPoint]) -> Fraction:
    """Twice the signed shoelace area."""
    n = len(poly)
    return sum((poly[i].x * poly[(i + 1) % n].y - poly[(i + 1) % n].x * poly[i].y
                for i in range(n)), Fraction(0))


def shoelace_ratio(polygon: Sequence[CartesianPoint], reference: Sequence[CartesianPoint]) -> Fraction:
    ref = abs(signed_area2(reference))
    if ref == 0:
        raise DegenerateReference("reference polygon has zero area")
    return abs(signed_area2(polygon)) / ref


def section(p: CartesianPoint, q: CartesianPoint, a, b) -> CartesianPoint:
    """Point dividing PQ so that P->X : X->Q = a : b."""
    a, b = as_rational(a), as_rational(b)
    return p.scale(b / (a + b)) + q.scale(a / (a + b))


def intersect(p1, p2, q1, q2) -> CartesianPoint:
    """Crossing of line p1p2 with line q1q2 (Cramer's rule)."""
    d1 = p2 - p1
    d2 = q2 - q1
    den = d1.x * d2.y - d1.y * d2.x
    if den == 0:
        raise PointAtInfinity("lines are parallel")
    t = ((q1.x - p1.x) * d2.y - (q1.y - p1.y) * d2.x) / den
    return p1 + d1.scale(t)


# --- embeddings -------------------------------------------------------------

@dataclass(frozen=True)
class AffineEmbedding:
    """Images of the reference triangle's corners, and for parallelograms
    the fourth corner D = A + C - B."""

    a1: CartesianPoint
    a2: CartesianPoint
    a3: CartesianPoint

    def __post_init__(self):
        if cross(self.a1, self.a2, self.a3) == 0:
            raise DegenerateReference("embedded triangle is degenerate")

    @property
    def corners(self) -> tuple[CartesianPoint, CartesianPoint, CartesianPoint]:
        return (self.a1, self.a2, self.a3)

    def fourth_corner(self) -> CartesianPoint:
        # corners are (C, A, B) of the parallelogram; D = A + C - B
        return self.a2 + self.a1 - self.a3

    def as_dict(self) -> dict:
        return {"A1": self.a1.as_strings(), "A2": self.a2.as_strings(), "A3": self.a3.as_strings()}


STANDARD = AffineEmbedding(P(0, 0), P(1, 0), P(0, 1))
# C=(1,0), A=(0,1), B=(0,0): ABCD is the unit square
UNIT_SQUARE = AffineEmbedding(P(1, 0), P(0, 1), P(0, 0))


def embed(point, e: AffineEmbedding) -> CartesianPoint:
    """Areal-weighted combination of the embedded corners.

    ``point`` is any homogeneous triple (a BaryPoint or a plain tuple).
    """
    t = [as_rational(x) for x in point]
    w = sum(t)
    if w == 0:
        raise PointAtInfinity(f"{tuple(map(str, t))} has zero coordinate sum")
    return P(sum(ti * c.x for ti, c in zip(t, e.corners)) / w,
             sum(ti * c.y for ti, c in zip(t, e.corners)) / w)


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-100, 100), rng.randint(1, 10))


def random_embedding(rng: random.Random) -> AffineEmbedding:
    while True:
        pts = [P(_random_rational(rng), _random_rational(rng)) for _ in range(3)]
        if cross(*pts) != 0:
            return AffineEmbedding(*pts)


def embedding_for(seed: int, index: int) -> AffineEmbedding:
    """Deterministic embedding number ``index`` of a seeded run."""
    return random_embedding(random.Random(f"{seed}:{index}"))


# --- figures ---------------------------------------------------------------

def routh_ratio(lam, mu, nu, e: AffineEmbedding = STANDARD) -> Fraction:
    a, b, c = e.corners
    l = section(b, c, lam, 1)
    m = section(c, a, mu, 1)
    n = section(a, b, nu, 1)
    x = intersect(a, l, b, m)
    y = intersect(b, m, c, n)
    z = intersect(c, n, a, l)
    return shoelace_ratio([x, y, z], [a, b, c])


def parallelogram_corners(e: AffineEmbedding):
    """(A, B, C, D) of the parallelogram under ``e``."""
    c, a, b = e.corners
    return a, b, c, e.fourth_corner()


def parallelogram_ratio(kappa, lam, mu, nu, e: AffineEmbedding = UNIT_SQUARE) -> Fraction:
    a, b, c, d = parallelogram_corners(e)
    k = section(b, c, kappa, 1)
    l = section(c, d, lam, 1)
    m = section(d, a, mu, 1)
    n = section(a, b, nu, 1)
    x = intersect(b, l, c, m)
    y = intersect(c, m, d, n)
    z = intersect(d, n, a, k)
    w = intersect(a, k, b, l)
    return shoelace_ratio([x, y, z, w], [a, b, c, d])


def cevian_segments(sides: Sequence[Sequence], e: AffineEmbedding = STANDARD):
    """(vertex, foot) pairs for every division point of every side.

    ``sides[i]`` holds the segment proportions of the side opposite corner
    i+1, running A2->A3, A3->A1, A1->A2.
    """
    a1, a2, a3 = e.corners
    spans = [(a1, a2, a3), (a2, a3, a1), (a3, a1, a2)]
    out = []
    for props, (apex, start, end) in zip(sides, spans):
        props = [as_rational(s) for s in props]
        total = sum(props)
        acc = Fraction(0)
        for s in props[:-1]:
            acc += s
            out.append((apex, section(start, end, acc, total - acc)))
    return out


def _split(poly: list[CartesianPoint], a: CartesianPoint, b: CartesianPoint):
    """Cut a convex polygon by line ab into its left and right parts."""
    side = [cross(a, b, p) for p in poly]
    if all(s >= 0 for s in side) or all(s <= 0 for s in side):
        return [poly]
    left, right = [], []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        sp, sq = side[i], side[(i + 1) % n]
        if sp >= 0:
            left.append(p)
        if sp <= 0:
            right.append(p)
        if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
            x = p + (q - p).scale(sp / (sp - sq))
            left.append(x)
            right.append(x)
    return [part for part in (left, right) if signed_area2(part) != 0]


def clip_faces(sides: Sequence[Sequence], e: AffineEmbedding = STANDARD) -> list[list[CartesianPoint]]:
    """Faces of the cevian arrangement, by cutting the triangle one cevian
    at a time.  Every cevian crosses the whole triangle, so all pieces stay
    convex."""
    pieces = [list(e.corners)]
    for apex, foot in cevian_segments(sides, e):
        pieces = [part for poly in pieces for part in _split(poly, apex, foot)]
    return pieces


def strict_corners(poly: Sequence[CartesianPoint]) -> frozenset:
    """Vertices where the boundary actually turns."""
    n = len(poly)
    return frozenset(
        (poly[i].x, poly[i].y) for i in range(n)
        if cross(poly[i - 1], poly[i], poly[(i + 1) % n]) != 0
    )


def face_ratio_multiset(sides, e: AffineEmbedding = STANDARD) -> Counter:
    ref = list(e.corners)
    return Counter(shoelace_ratio(f, ref) for f in clip_faces(sides, e))


def hexagon_ratio(lam, e: AffineEmbedding = STANDARD) -> Fraction:
    """Area of the arrangement face that contains the centroid, for sides
    split 1 : lam : 1."""
    sides = [(1, lam, 1)] * 3
    g = P(sum(c.x for c in e.corners) / 3, sum(c.y for c in e.corners) / 3)
    for face in clip_faces(sides, e):
        n = len(face)
        signs = {cross(face[i], face[(i + 1) % n], g) > 0 for i in range(n)}
        if len(signs) == 1:
            return shoelace_ratio(face, list(e.corners))
    raise AssertionError("centroid lies on a cevian")


# --- invariance -------------------------------------------------------------

@dataclass
class InvarianceReport:
    figure: str
    params: dict
    engine_value: object
    embeddings: list[AffineEmbedding] = field(default_factory=list)
    values: list[object] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v == self.engine_value for v in self.values)

    def as_dict(self) -> dict:
        return {
            "figure": self.figure,
            "params": self.params,
            "engine": _render_value(self.engine_value),
            "embeddings": [
                {"corners": e.as_dict(), "value": _render_value(v)}
                for e, v in zip(self.embeddings, self.values)
            ],
            "ok": self.ok,
        }


def _render_value(v):
    if isinstance(v, Counter):
        return [render(q) for q in sorted(v.elements())]
    return render(v)


def _engine_and_oracle(figure: str, params: dict) -> tuple[object, Callable[[AffineEmbedding], object]]:
    # engine imports stay local: the oracle's own code must not depend on them
    if figure == "routh":
        from .triangle import routh_triangle_ratio
        lam, mu, nu = (as_rational(params[k]) for k in ("lambda", "mu", "nu"))
        return routh_triangle_ratio(lam, mu, nu), lambda e: routh_ratio(lam, mu, nu, e)
    if figure == "hexagon":
        from .triangle import hexagon_ratio_geometric
        lam = as_rational(params["lambda"])
        return hexagon_ratio_geometric(lam), lambda e: hexagon_ratio(lam, e)
    if figure == "parallelogram":
        from .parallelogram import ParallelogramConfig, quadrilateral_ratio_geometric
        ratios = [as_rational(params[k]) for k in ("kappa", "lambda", "mu", "nu")]
        value = quadrilateral_ratio_geometric(ParallelogramConfig(*ratios))
        return value, lambda e: parallelogram_ratio(*ratios, e)
    if figure == "faces":
        from .arrangement import build_arrangement
        from .triangle import TriangleConfig
        sides = [[as_rational(s) for s in side] for side in params["sides"]]
        arr = build_arrangement(TriangleConfig.from_proportions(*sides))
        return Counter(f.ratio for f in arr.faces), lambda e: face_ratio_multiset(sides, e)
    raise ValueError(f"unknown figure {figure!r}")


def verify_invariance(figure: str, params: dict, count: int = 10, seed: int = 0) -> InvarianceReport:
    """Recompute a figure's ratio under ``count`` random rational embeddings.

    ``figure`` is one of ``routh``, ``hexagon``, ``parallelogram`` or
    ``faces`` (the multiset of all arrangement face ratios).  Raises
    :class:`MismatchFound` carrying the first disagreeing embedding.
    """
    if count < 1:
        raise ValueError("need at least one embedding")
    engine_value, oracle = _engine_and_oracle(figure, params)
    report = InvarianceReport(figure, params, engine_value)
    for i in range(count):
        e = embedding_for(seed, i)
        value = oracle(e)
        report.embeddings.append(e)
        report.values.append(value)
        if value != engine_value:
            raise MismatchFound(
                f"{figure}: oracle gives {_render_value(value)}, "
                f"engine gives {_render_value(engine_value)}",
                witness=e,
            )
    return report
