"""Closed-form area ratios, evaluated directly from their formulas.

Nothing here touches the barycentric engine; these are the targets the
geometric constructions are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadParity, DegenerateDenominator
from .exact import as_rational


@dataclass(frozen=True)
class RouthParams:
    lam: Fraction
    mu: Fraction
    nu: Fraction

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))


def _checked_quotient(num: Fraction, den: Fraction, what: str) -> Fraction:
    if den == 0:
        raise DegenerateDenominator(f"{what}: denominator vanishes")
    return num / den


def routh_formula(p: RouthParams) -> Fraction:
    """(lam*mu*nu - 1)^2 / ((lam*mu + lam + 1)(mu*nu + mu + 1)(nu*lam + nu + 1))."""
    l, m, n = p.lam, p.mu, p.nu
    den = (l * m + l + 1) * (m * n + m + 1) * (n * l + n + 1)
    return _checked_quotient((l * m * n - 1) ** 2, den, "Routh formula")


def hexagon_formula(lam) -> Fraction:
    """2 lam^2 / ((3 + lam)(2 lam + 3)) for sides split 1 : lam : 1."""
    lam = as_rational(lam)
    return _checked_quotient(2 * lam**2, (3 + lam) * (2 * lam + 3), "hexagon formula")


def morgan_formula(n: int) -> Fraction:
    """8 / (9 n^2 - 1): hexagon for n equal parts, n odd (lam = 1/k, n = 2k+1)."""
    if not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise BadParity(f"Morgan's case needs odd n >= 3, got {n!r}")
    return Fraction(8, 9 * n * n - 1)


def even_case_formula(n: int) -> Fraction:
    """2 (n-2)^2 / ((n+1)(2n-1)): hexagon for even n with lam = n - 2."""
    if not isinstance(n, int) or n < 4 or n % 2 == 1:
        raise BadParity(f"even case needs even n >= 4, got {n!r}")
    return Fraction(2 * (n - 2) ** 2, (n + 1) * (2 * n - 1))


def corollary_formula(lam) -> Fraction:
    """1 / (2 lam^2 + 2 lam + 1): parallelogram with all four sides in lam:1."""
    lam = as_rational(lam)
    return _checked_quotient(Fraction(1), 2 * lam**2 + 2 * lam + 1, "corollary")


def de_villiers_formula(p) -> Fraction:
    """(p^2 - 2p + 1) / (p^2 + 1), the corollary rewritten with lam = 1/(p-1)."""
    p = as_rational(p)
    return _checked_quotient(p * p - 2 * p + 1, p * p + 1, "De Villiers form")
