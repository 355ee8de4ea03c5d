"""Cevians of a parallelogram ABCD with all four sides divided.

The reference triangle is (C, A, B), so A = (0,1,0), B = (0,0,1),
C = (1,0,0) and the fourth corner is D = A + C - B = (1,1,-1).  The
parallelogram covers two reference-triangle units.

BC, CD, DA, AB are divided at K, L, M, N in the ratios kappa:1, lambda:1,
mu:1, nu:1 (measured from the first-named corner).  The cevians AK, BL, CM,
DN bound the inner quadrilateral XYZW with X = BL^CM, Y = CM^DN, Z = DN^AK,
W = AK^BL.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import bary
from .bary import BaryLine, BaryPoint
from .errors import DegenerateDenominator, InvalidConfig
from .exact import as_rational

A = BaryPoint(0, 1, 0)
B = BaryPoint(0, 0, 1)
C = BaryPoint(1, 0, 0)
D = BaryPoint(1, 1, -1)

PARALLELOGRAM_AREA = Fraction(2)


@dataclass(frozen=True)
class ParallelogramConfig:
    kappa: Fraction
    lam: Fraction
    mu: Fraction
    nu: Fraction

    def __post_init__(self):
        for name in ("kappa", "lam", "mu", "nu"):
            value = as_rational(getattr(self, name))
            if value <= 0:
                raise InvalidConfig(f"{name} must be positive, got {value}")
            object.__setattr__(self, name, value)

    @classmethod
    def equal(cls, lam) -> "ParallelogramConfig":
        return cls(lam, lam, lam, lam)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.kappa, self.lam, self.mu, self.nu)

    def half_turn(self) -> "ParallelogramConfig":
        """The same figure rotated by 180 degrees about its centre."""
        return ParallelogramConfig(self.mu, self.nu, self.kappa, self.lam)


@dataclass(frozen=True)
class ParallelogramFigure:
    config: ParallelogramConfig
    K: BaryPoint
    L: BaryPoint
    M: BaryPoint
    N: BaryPoint
    AK: BaryLine
    BL: BaryLine
    CM: BaryLine
    DN: BaryLine
    X: BaryPoint
    Y: BaryPoint
    Z: BaryPoint
    W: BaryPoint

    A = A
    B = B
    C = C
    D = D

    @property
    def corners(self) -> tuple[BaryPoint, BaryPoint, BaryPoint, BaryPoint]:
        return (A, B, C, D)

    @property
    def quadrilateral(self) -> tuple[BaryPoint, BaryPoint, BaryPoint, BaryPoint]:
        return (self.X, self.Y, self.Z, self.W)

    def incidences(self) -> list[tuple[str, BaryPoint, BaryLine]]:
        """The eight point-on-cevian relations that define X, Y, Z, W."""
        return [
            ("X", self.X, self.BL), ("X", self.X, self.CM),
            ("Y", self.Y, self.CM), ("Y", self.Y, self.DN),
            ("Z", self.Z, self.DN), ("Z", self.Z, self.AK),
            ("W", self.W, self.AK), ("W", self.W, self.BL),
        ]


def build_figure(cfg: ParallelogramConfig) -> ParallelogramFigure:
    k, l, m, n = cfg.as_tuple()
    K = bary.divide_segment(B, C, k, 1)
    L = bary.divide_segment(C, D, l, 1)
    M = bary.divide_segment(D, A, m, 1)
    N = bary.divide_segment(A, B, n, 1)
    AK, BL, CM, DN = bary.join(A, K), bary.join(B, L), bary.join(C, M), bary.join(D, N)
    return ParallelogramFigure(
        config=cfg, K=K, L=L, M=M, N=N, AK=AK, BL=BL, CM=CM, DN=DN,
        X=bary.meet(BL, CM), Y=bary.meet(CM, DN),
        Z=bary.meet(DN, AK), W=bary.meet(AK, BL),
    )


def quadrilateral_ratio_geometric(cfg: ParallelogramConfig) -> Fraction:
    """area(XYZW) / area(ABCD), split along the diagonal XZ."""
    fig = build_figure(cfg)
    X, Y, Z, W = fig.quadrilateral
    xyz = abs(bary.triangle_ratio_signed(X, Y, Z))
    zwx = abs(bary.triangle_ratio_signed(Z, W, X))
    return (xyz + zwx) / PARALLELOGRAM_AREA


def _nonzero(*factors: Fraction) -> None:
    if any(f == 0 for f in factors):
        raise DegenerateDenominator("a denominator factor vanishes")


def _inner_point_rows(cfg: ParallelogramConfig):
    """Unnormalized X, Y, Z, W as closed-form rows (t2 = 1 or t3 = 1 scaling)."""
    k, l, m, n = cfg.as_tuple()
    _nonzero(l, n, 1 + m, 1 + n, 1 + l)
    X = (Fraction(l + 1) / l, Fraction(1), Fraction(-1) / (m + 1))
    Y = (-(1 + n + n * m) / (1 + n), -m - 1, Fraction(1))
    Z = (k, (1 + k + k * n) / n, Fraction(1))
    W = (k, l * k / (l + 1), Fraction(1))
    return X, Y, Z, W


def eval_r1_r2(cfg: ParallelogramConfig) -> tuple[Fraction, Fraction]:
    """The two determinant quotients whose sum is twice the area ratio.

    ``r1`` keeps its leading minus sign, which compensates for the negative
    coordinate sum of Y.
    """
    X, Y, Z, W = _inner_point_rows(cfg)
    den_x, den_y, den_z, den_w = (sum(p) for p in (X, Y, Z, W))
    _nonzero(den_x, den_y, den_z, den_w)
    # the closed form divides by |sum(Y)| = -sum(Y)
    r1 = -bary.det3([X, Y, Z]) / (den_x * -den_y * den_z)
    r2 = bary.det3([Z, W, X]) / (den_z * den_w * den_x)
    return r1, r2


def eval_eq1(cfg: ParallelogramConfig) -> Fraction:
    """Two-term closed form for area(XYZW) / area(ABCD)."""
    k, l, m, n = cfg.as_tuple()
    _nonzero(l, n, 1 + m, 1 + n, 1 + l)
    shared = (2 + 1 / l - 1 / (1 + m)) * (1 + 2 * k + (k + 1) / n)
    den1 = shared * (1 + m + n * m / (1 + n))
    den2 = shared * (1 + k + l * k / (1 + l))
    _nonzero(den1, den2)
    num1 = (m / (1 + n) + (1 + m) / l) * (1 + k / (1 + m) + (k + 1) / (n * (1 + m)))
    num2 = ((k + 1) / n + k / (1 + l)) * (1 + 1 / l + k / (1 + m))
    return num1 / den1 / 2 + num2 / den2 / 2


def reduced_determinants(cfg: ParallelogramConfig) -> tuple[Fraction, Fraction]:
    """The r1 and r2 determinants after row and column reductions that zero out entries.

    These must equal ``det3([X, Y, Z])`` and ``det3([Z, W, X])``.
    """
    k, l, m, n = cfg.as_tuple()
    X, Y, Z, W = _inner_point_rows(cfg)
    # Y <- Y + (m + 1) X clears the last two entries of the middle row
    Yr = (Y[0] + (m + 1) * X[0], Fraction(0), Fraction(0))
    d1 = bary.det3([X, Yr, Z])
    # first column <- first - k * last column (Z, W have last entry 1)
    rows = [Z, W, X]
    reduced = [(r[0] - k * r[2], r[1], r[2]) for r in rows]
    d2 = bary.det3(reduced)
    return d1, d2
