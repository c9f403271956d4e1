#!/usr/bin/env python3
"""Render every figure recipe for the canonical fixture into an output dir.

Usage: python3 scripts/render_all.py [outdir]   (default: ./figures)
"""

import pathlib
import sys

from quadgeo.cli_figures import RECIPES, build_scene, render_svg


def main() -> None:
    outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
    outdir.mkdir(parents=True, exist_ok=True)
    for recipe in sorted(RECIPES):
        svg = render_svg(build_scene("t0", recipe))
        path = outdir / f"{recipe}.svg"
        path.write_bytes(svg)
        print(f"wrote {path} ({len(svg)} bytes)")


if __name__ == "__main__":
    main()
