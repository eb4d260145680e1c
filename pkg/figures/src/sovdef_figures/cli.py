"""Render one figure per invocation from exported CSVs.

Examples:
  sovdef-figures densities --inputs slices/density_slice.csv --out figs/densities.png
  sovdef-figures dep --inputs runs/dep.csv --out figs/dep.png
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from sovdef_figures.render import FIGURE_IDS, FigureSpec, render


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="sovdef-figures", description=__doc__)
    ap.add_argument("figure", choices=FIGURE_IDS)
    ap.add_argument("--inputs", nargs="+", required=True, help="CSV exports from the solver package")
    ap.add_argument("--out", required=True, help="output image path")
    ap.add_argument("--title", default=None)
    ap.add_argument("--atoms", action="store_true", help="plot pmfs as atoms instead of curves")
    ap.add_argument("--shade-threshold", type=float, default=0.5)
    args = ap.parse_args(argv)
    labels = {} if args.title is None else {"title": args.title}
    spec = FigureSpec(
        figure_id=args.figure, inputs=list(args.inputs), output=Path(args.out),
        labels=labels, shade_threshold=args.shade_threshold, atoms=args.atoms,
    )
    render(spec)
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
