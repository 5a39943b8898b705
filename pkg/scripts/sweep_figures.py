"""Radius-vs-M curves behind the published figures, written as CSV.

    python scripts/sweep_figures.py --out-dir results/ [--steps 200]

One file per curve: the Bohr-Rogosinski radius ``br`` with N=3 and N=8, and the
squared variant ``br-sq`` with N=8.  Columns: M,radius,residual,status.
"""

import argparse
from pathlib import Path

import numpy as np

from bohrlab.cli import csv_text, sweep_rows
from bohrlab.radius_eqs import Kind, RadiusProblem
from bohrlab.specfun import M_STAR

CURVES = {
    "br_N3": RadiusProblem(Kind.BOHR_ROGOSINSKI, 0.5, N=3),
    "br_N8": RadiusProblem(Kind.BOHR_ROGOSINSKI, 0.5, N=8),
    "br-sq_N8": RadiusProblem(Kind.BOHR_ROGOSINSKI_SQUARED, 0.5, N=8),
}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out-dir", type=Path, required=True)
    parser.add_argument("--steps", type=int, default=200)
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    grid = np.linspace(0.01, M_STAR * (1 - 1e-6), args.steps)
    for name, problem in CURVES.items():
        path = args.out_dir / f"{name}.csv"
        path.write_text(csv_text(sweep_rows(problem, grid)))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
