"""Write the standard figures as SVG files."""

import argparse
from pathlib import Path

from cevians import svg
from cevians.arrangement import build_arrangement
from cevians.bary import CENTROID
from cevians.parallelogram import ParallelogramConfig
from cevians.triangle import TriangleConfig


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", nargs="?", default="figures")
    args = parser.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    svg.emit_svg(svg.routh_drawing(2, 2, 2), out / "routh_2_2_2.svg")
    svg.emit_svg(svg.hexagon_drawing(1), out / "hexagon_trisection.svg")
    svg.emit_svg(svg.hexagon_drawing(2), out / "hexagon_1_2_1.svg")
    svg.emit_svg(svg.parallelogram_drawing(ParallelogramConfig(1, 1, 1, 1)), out / "parallelogram_1_1_1_1.svg")

    cfg = TriangleConfig.uniform(1, 1, 1, 1, 1)
    face = build_arrangement(cfg).face_containing(CENTROID)
    svg.emit_svg(svg.triangle_drawing(cfg, face.vertices), out / "fifths_central_face.svg")
    for p in sorted(out.glob("*.svg")):
        print(p)


if __name__ == "__main__":
    main()
