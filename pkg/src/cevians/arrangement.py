"""Exact planar subdivision of the reference triangle by all of its cevians.

Vertices are the corners, the division points and every cevian crossing,
deduplicated by their areal coordinates (so concurrent cevians collapse to
one vertex with no tolerance involved).  Faces are traced on a half-edge
structure.  Angular order around a vertex uses the fixed picture
A1=(0,0), A2=(1,0), A3=(0,1), where a point's areal (t1, t2, t3) sits at
(t2, t3); areas are always computed barycentrically.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import bary
from .bary import A1, A2, A3, BaryLine, BaryPoint
from .triangle import TriangleConfig, cevian_line

Key = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Face:
    id: int
    vertices: tuple[BaryPoint, ...]  # counterclockwise, areal representatives
    ratio: Fraction


@dataclass(frozen=True)
class Arrangement:
    config: TriangleConfig
    vertices: tuple[BaryPoint, ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[Face, ...]

    @property
    def euler_characteristic(self) -> int:
        # the unbounded face counts once
        return len(self.vertices) - len(self.edges) + len(self.faces) + 1

    def degree(self, p: BaryPoint) -> int:
        idx = self.vertices.index(p)
        return sum(idx in e for e in self.edges)

    def face_containing(self, p: BaryPoint) -> Face:
        """The face whose closure contains ``p`` strictly inside or, failing
        that, on its boundary (first in report order)."""
        q = _xy(_key(p))
        boundary = None
        for face in self.faces:
            pts = [_xy(_key(v)) for v in face.vertices]
            signs = [_orient(pts[i], pts[(i + 1) % len(pts)], q) for i in range(len(pts))]
            if all(s > 0 for s in signs):
                return face
            if boundary is None and all(s >= 0 for s in signs):
                boundary = face
        if boundary is None:
            raise ValueError(f"{p!r} is outside the triangle")
        return boundary

    def interior_faces(self) -> list[Face]:
        """Faces that touch no side of the triangle."""
        return [f for f in self.faces if all(min(_key(v)) > 0 for v in f.vertices)]


def _key(p: BaryPoint) -> Key:
    return bary.normalize(p).coords()


def _xy(k: Key) -> tuple[Fraction, Fraction]:
    return (k[1], k[2])


def _orient(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _angle_cmp(u, v) -> int:
    """Counterclockwise order of direction vectors, starting at +x."""
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _segments(cfg: TriangleConfig) -> list[BaryLine]:
    sides = [bary.join(A2, A3), bary.join(A3, A1), bary.join(A1, A2)]
    return sides + [cevian_line(cfg, c) for c in cfg.cevians()]


class _Builder:
    def __init__(self, cfg: TriangleConfig):
        self.cfg = cfg
        self.index: dict[Key, int] = {}
        self.points: list[Key] = []

    def add(self, k: Key) -> int:
        if k not in self.index:
            self.index[k] = len(self.points)
            self.points.append(k)
        return self.index[k]

    def build(self) -> Arrangement:
        lines = _segments(self.cfg)
        on_line: list[set[int]] = [set() for _ in lines]
        for corner in (A1, A2, A3):
            self.add(_key(corner))
        # every line here meets the closed triangle in exactly its segment,
        # so a crossing belongs to both segments iff it lies in the triangle
        for i in range(len(lines)):
            for j in range(i + 1, len(lines)):
                p = bary.meet(lines[i], lines[j])
                if not p.is_finite:
                    continue
                k = _key(p)
                if min(k) < 0:
                    continue
                v = self.add(k)
                on_line[i].add(v)
                on_line[j].add(v)

        edges: set[tuple[int, int]] = set()
        for members in on_line:
            ordered = self._along(members)
            for a, b in zip(ordered, ordered[1:]):
                edges.add((min(a, b), max(a, b)))

        faces = self._trace(edges)
        vertices = tuple(BaryPoint(*k) for k in self.points)
        return Arrangement(self.cfg, vertices, tuple(sorted(edges)), faces)

    def _along(self, members: Iterable[int]) -> list[int]:
        members = list(members)
        pts = [_xy(self.points[m]) for m in members]
        # sort by projection on the segment direction; the extreme pair gives it
        x0 = min(pts)
        x1 = max(pts)
        d = (x1[0] - x0[0], x1[1] - x0[1])
        return [m for _, m in sorted(
            ((p[0] - x0[0]) * d[0] + (p[1] - x0[1]) * d[1], m) for p, m in zip(pts, members)
        )]

    def _trace(self, edges: set[tuple[int, int]]) -> tuple[Face, ...]:
        xy = [_xy(k) for k in self.points]
        nbrs: dict[int, list[int]] = {i: [] for i in range(len(self.points))}
        for a, b in edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        rank: dict[tuple[int, int], int] = {}
        for v, ns in nbrs.items():
            def direction(w, v=v):
                return (xy[w][0] - xy[v][0], xy[w][1] - xy[v][1])
            ns.sort(key=functools.cmp_to_key(lambda a, b: _angle_cmp(direction(a), direction(b))))
            for r, w in enumerate(ns):
                rank[(v, w)] = r

        seen: set[tuple[int, int]] = set()
        cycles = []
        for a, b in edges:
            for start in ((a, b), (b, a)):
                if start in seen:
                    continue
                cycle = []
                he = start
                while he not in seen:
                    seen.add(he)
                    u, v = he
                    cycle.append(u)
                    # turn to the clockwise neighbour of the reverse edge: face on the left
                    ns = nbrs[v]
                    w = ns[(rank[(v, u)] - 1) % len(ns)]
                    he = (v, w)
                cycles.append(cycle)

        faces = []
        for cycle in cycles:
            pts = [BaryPoint(*self.points[i]) for i in cycle]
            signed = bary.polygon_ratio_signed(pts)
            if signed <= 0:
                continue  # the unbounded face runs clockwise
            start = min(range(len(cycle)), key=lambda i: self.points[cycle[i]])
            cycle = cycle[start:] + cycle[:start]
            faces.append((sorted(self.points[i] for i in cycle), cycle, signed))
        faces.sort(key=lambda f: f[0])
        return tuple(
            Face(n, tuple(BaryPoint(*self.points[i]) for i in cycle), ratio)
            for n, (_, cycle, ratio) in enumerate(faces)
        )


def build_arrangement(cfg: TriangleConfig) -> Arrangement:
    return _Builder(cfg).build()


def face_ratios(arr: Arrangement) -> list[tuple[int, tuple[BaryPoint, ...], Fraction]]:
    return [(f.id, f.vertices, f.ratio) for f in arr.faces]
