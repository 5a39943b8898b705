"""Recompute the three published radius tables and compare entry by entry.

    python scripts/reproduce_tables.py [--out-dir results/]

Writes ``table_<id>.csv`` (recomputed, 3 decimals) per table when --out-dir
is given and prints a side-by-side comparison.  Exit status is 1 if any
entry outside the known-misprint list deviates by more than 2e-3.
"""

import argparse
import sys
from pathlib import Path

from bohrlab.cli import csv_text, table_rows
from bohrlab.tables import TABLES, TOLERANCE, compute_table


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out-dir", type=Path)
    args = parser.parse_args()

    unexpected = 0
    for table_id, layout in TABLES.items():
        print(f"Table {table_id} ({layout.kind.value}), tolerance {TOLERANCE:g}")
        for cell in compute_table(table_id):
            mark = "ok"
            if not cell.matches:
                mark = "KNOWN MISPRINT" if cell.known_misprint else "MISMATCH"
                unexpected += not cell.known_misprint
            print(f"  r_{cell.N:<2} M={cell.M:<5g} published {cell.published:<7} "
                  f"computed {cell.computed:.5f}  {mark}")
        if args.out_dir:
            args.out_dir.mkdir(parents=True, exist_ok=True)
            (args.out_dir / f"table_{table_id}.csv").write_text(csv_text(table_rows(table_id)))
    return 1 if unexpected else 0


if __name__ == "__main__":
    sys.exit(main())
