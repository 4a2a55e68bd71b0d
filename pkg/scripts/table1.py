"""Recompute the Albanese irreducible counts and compare with the golden table.

    python3 scripts/table1.py --d-max 8
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from bisym.applications import albanese_counts

ROOT = Path(__file__).resolve().parents[1]


@dataclass
class Table1Config:
    d_max: int = 8
    threads: int = 1
    golden: Path = ROOT / "tests" / "golden" / "v1" / "table1.csv"
    out: Path | None = None


def load_golden(path: Path) -> dict:
    with open(path) as fh:
        return {int(r["d"]): (int(r["n_irr"]), int(r["sum_mult"])) for r in csv.DictReader(fh)}


def run(cfg: Table1Config) -> int:
    golden = load_golden(cfg.golden)
    t0 = time.perf_counter()
    rows = albanese_counts(cfg.d_max, cfg.threads)
    secs = time.perf_counter() - t0
    mismatches = 0
    print(f"{'d':>3} {'n_irr':>7} {'sum_mult':>10}  golden")
    for d, n, s in rows:
        ref = golden.get(d)
        status = "-" if ref is None else ("ok" if ref == (n, s) else f"MISMATCH {ref}")
        mismatches += status.startswith("MISMATCH")
        print(f"{d:>3} {n:>7} {s:>10}  {status}")
    print(f"# computed d <= {cfg.d_max} in {secs:.1f} s")
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["d", "n_irr", "sum_mult"])
            w.writerows(rows)
    return 1 if mismatches else 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d-max", type=int, default=Table1Config.d_max)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", type=Path, default=None, help="also write the rows as CSV")
    a = ap.parse_args(argv)
    return run(Table1Config(d_max=a.d_max, threads=a.threads, out=a.out))


if __name__ == "__main__":
    sys.exit(main())
