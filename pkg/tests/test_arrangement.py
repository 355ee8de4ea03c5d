import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cevians import oracle
from cevians.arrangement import build_arrangement, face_ratios
from cevians.bary import CENTROID, normalize
from cevians.triangle import TriangleConfig

from conftest import positive_rationals

F = Fraction


def random_config(rng: random.Random, max_points=3) -> TriangleConfig:
    sides = []
    for _ in range(3):
        n = rng.randint(1, max_points + 1)
        sides.append([F(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(n)])
    return TriangleConfig.from_proportions(*sides)


def seeded_configs(count=24, seed=7):
    rng = random.Random(seed)
    fixed = [
        TriangleConfig.uniform(1),
        TriangleConfig.uniform(1, 1),
        TriangleConfig.routh(2, 2, 2),
        TriangleConfig.uniform(1, 1, 1),
        TriangleConfig.uniform(1, 1, 1, 1),
        TriangleConfig.routh(2, F(1, 2), 1),
    ]
    return fixed + [random_config(rng) for _ in range(count - len(fixed))]


def edge_uses(arr):
    uses = Counter()
    index = {v: i for i, v in enumerate(arr.vertices)}
    for face in arr.faces:
        cyc = [index[v] for v in face.vertices]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            uses[(min(a, b), max(a, b))] += 1
    return uses


def on_boundary(arr, edge):
    a, b = (normalize(arr.vertices[i]).coords() for i in edge)
    return any(x == 0 and y == 0 for x, y in zip(a, b))


def test_no_cevians():
    arr = build_arrangement(TriangleConfig.from_proportions([1], [3], [F(1, 2)]))
    assert [f.ratio for f in arr.faces] == [1]


def test_routh_two_two_two():
    arr = build_arrangement(TriangleConfig.routh(2, 2, 2))
    assert len(arr.faces) == 7
    (centre,) = arr.interior_faces()
    assert centre.ratio == F(1, 7)
    assert len(centre.vertices) == 3
    assert Counter(f.ratio for f in arr.faces) == oracle.face_ratio_multiset([(2, 1)] * 3)


def test_medians():
    arr = build_arrangement(TriangleConfig.uniform(1, 1))
    assert [f.ratio for f in arr.faces] == [F(1, 6)] * 6
    assert arr.degree(CENTROID) == 6


def test_trisection_central_hexagon():
    arr = build_arrangement(TriangleConfig.uniform(1, 1, 1))
    centre = arr.face_containing(CENTROID)
    assert len(centre.vertices) == 6
    assert centre.ratio == F(1, 10)
    assert sum(r for _, _, r in face_ratios(arr)) == 1


@pytest.mark.parametrize("index", range(5))
def test_routh_faces_invariant_under_embedding(index):
    arr = build_arrangement(TriangleConfig.routh(2, 2, 2))
    e = oracle.embedding_for(99, index)
    assert Counter(f.ratio for f in arr.faces) == oracle.face_ratio_multiset([(2, 1)] * 3, e)


def test_face_report_is_deterministic():
    cfg = TriangleConfig.from_proportions([1, 2, 3], [2, 1], [1, 1, 1, 1])
    a, b = face_ratios(build_arrangement(cfg)), face_ratios(build_arrangement(cfg))
    assert a == b
    assert [fid for fid, _, _ in a] == list(range(len(a)))
    keys = [min(normalize(v).coords() for v in verts) for _, verts, _ in a]
    assert keys == sorted(keys)
    for _, verts, _ in a:
        assert normalize(verts[0]).coords() == min(normalize(v).coords() for v in verts)


@pytest.mark.parametrize("cfg", seeded_configs(), ids=lambda c: "x".join(
    ":".join(map(str, s.proportions)) for s in c.side_divisions))
def test_structure(cfg):
    arr = build_arrangement(cfg)
    assert sum(f.ratio for f in arr.faces) == 1
    assert all(f.ratio > 0 for f in arr.faces)
    assert arr.euler_characteristic == 2
    uses = edge_uses(arr)
    assert set(uses) == set(arr.edges)
    for edge, n in uses.items():
        assert n == (1 if on_boundary(arr, edge) else 2)


@pytest.mark.parametrize("cfg", seeded_configs(count=20, seed=31))
def test_faces_match_clipping_oracle(cfg):
    sides = [s.proportions for s in cfg.side_divisions]
    e = oracle.STANDARD
    ref = list(e.corners)
    got = {oracle.strict_corners([oracle.embed(v, e) for v in f.vertices]): f.ratio
           for f in build_arrangement(cfg).faces}
    want = {oracle.strict_corners(f): oracle.shoelace_ratio(f, ref) for f in oracle.clip_faces(sides, e)}
    assert got == want


@given(positive_rationals(), positive_rationals(),
       st.lists(positive_rationals(), min_size=1, max_size=3))
def test_concurrent_cevians(lam, mu, extra):
    # lam * mu * nu = 1 makes the first cevian of each side concurrent
    nu = 1 / (lam * mu)
    # extra points split the tail of side 3 without moving its first point
    tail = [x / sum(extra) for x in extra]
    cfg = TriangleConfig.from_proportions([lam, 1], [mu, 1], [nu] + tail)
    arr = build_arrangement(cfg)
    assert sum(f.ratio for f in arr.faces) == 1
    assert all(f.ratio > 0 for f in arr.faces)
    assert arr.euler_characteristic == 2
    assert max(arr.degree(v) for v in arr.vertices) >= 6


@given(st.integers(0, 10**6))
def test_face_multiset_depends_only_on_divisions(seed):
    rng = random.Random(seed)
    cfg = random_config(rng, max_points=2)
    sides = [s.proportions for s in cfg.side_divisions]
    engine = Counter(f.ratio for f in build_arrangement(cfg).faces)
    assert oracle.face_ratio_multiset(sides, oracle.embedding_for(seed, 0)) == engine
