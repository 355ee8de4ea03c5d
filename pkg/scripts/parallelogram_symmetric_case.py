"""Inner quadrilateral ratio when kappa = mu and lambda = nu.

No closed form is asserted; this tabulates exact values on a small grid
and checks them against the general two-term formula and the oracle.
"""

import argparse
from fractions import Fraction

from cevians import oracle
from cevians.exact import render
from cevians.parallelogram import ParallelogramConfig, eval_eq1, quadrilateral_ratio_geometric


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=4, help="grid runs over a, b in 1/max .. max")
    args = parser.parse_args()

    grid = sorted({Fraction(p, q) for p in range(1, args.max + 1) for q in range(1, args.max + 1)})
    print(f"{'kappa=mu':>9} {'lambda=nu':>9}  ratio")
    for a in grid:
        for b in grid:
            cfg = ParallelogramConfig(a, b, a, b)
            value = quadrilateral_ratio_geometric(cfg)
            assert value == eval_eq1(cfg) == oracle.parallelogram_ratio(a, b, a, b)
            print(f"{render(a):>9} {render(b):>9}  {render(value)}")


if __name__ == "__main__":
    main()
