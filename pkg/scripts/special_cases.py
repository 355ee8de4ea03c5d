"""Hexagon ratios for sides cut into n equal parts, geometry next to formula.

Odd n uses the two middle division points (lambda = 1/k, n = 2k+1); even n
uses the two points next to the corners (lambda = n - 2).
"""

import argparse
from fractions import Fraction

from cevians.arrangement import build_arrangement
from cevians.bary import CENTROID
from cevians.closed_forms import even_case_formula, morgan_formula
from cevians.exact import render
from cevians.triangle import TriangleConfig, hexagon_ratio_geometric


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=15)
    args = parser.parse_args()

    print(f"{'n':>3}  {'lambda':>7}  {'geometric':>12}  {'formula':>12}  central face of n-section")
    for n in range(3, args.max_n + 1):
        if n % 2:
            lam, formula = Fraction(1, (n - 1) // 2), morgan_formula(n)
        else:
            lam, formula = Fraction(n - 2), even_case_formula(n)
        geo = hexagon_ratio_geometric(lam)
        # for odd n the hexagon is also the central face of the full n-section
        centre = ""
        if n % 2 and n <= 9:
            arr = build_arrangement(TriangleConfig.uniform(*[1] * n))
            centre = render(arr.face_containing(CENTROID).ratio)
        flag = "" if geo == formula else "  MISMATCH"
        print(f"{n:>3}  {render(lam):>7}  {render(geo):>12}  {render(formula):>12}  {centre}{flag}")


if __name__ == "__main__":
    main()
