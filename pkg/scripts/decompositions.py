"""Regenerate the decomposition lists behind the golden files and diff them.

    python3 scripts/decompositions.py            # compare against tests/golden/v1
    python3 scripts/decompositions.py --write out/   # also dump fresh JSON reports
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from bisym.applications import decomposition_report
from bisym.bases import DecompositionReport

ROOT = Path(__file__).resolve().parents[1]


@dataclass
class DecompositionConfig:
    # (variant, degree, file stem)
    runs: List[Tuple[str, int, str]] = field(
        default_factory=lambda: [("Q", d, f"autfn_Q_d{d}") for d in range(5)]
        + [("Qprime", d, f"albanese_Qprime_d{d}") for d in range(1, 6)]
    )
    p_max: int = 4
    golden_dir: Path = ROOT / "tests" / "golden" / "v1"
    write_dir: Optional[Path] = None


def diff(got: DecompositionReport, ref: DecompositionReport) -> List[str]:
    a, b = got.as_dict(), ref.as_dict()
    out = []
    for key in sorted(set(a) | set(b)):
        if a.get(key) != b.get(key):
            out.append(f"  {list(key[0])},{list(key[1])} d={key[2]}: got {a.get(key)}, expected {b.get(key)}")
    return out


def run(cfg: DecompositionConfig) -> int:
    bad = 0
    if cfg.write_dir:
        cfg.write_dir.mkdir(parents=True, exist_ok=True)
    for variant, d, stem in cfg.runs:
        t0 = time.perf_counter()
        p_max = cfg.p_max if variant != "Qprime" else None
        rep = decomposition_report(variant, d, p_max=p_max)
        secs = time.perf_counter() - t0
        path = cfg.golden_dir / f"{stem}.json"
        lines = diff(rep, DecompositionReport.from_json(json.loads(path.read_text()))) if path.exists() else ["  no golden file"]
        status = "ok" if not lines else "DIFF"
        bad += bool(lines)
        print(f"{stem:<24} rows={len(rep):>4} mult={str(rep.total_multiplicity()):>5} {secs:6.2f} s  {status}")
        for line in lines[:10]:
            print(line)
        if cfg.write_dir:
            (cfg.write_dir / f"{stem}.json").write_text(json.dumps(rep.to_json(), indent=1) + "\n")
    return 1 if bad else 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p-max", type=int, default=DecompositionConfig.p_max)
    ap.add_argument("--write", type=Path, default=None, help="directory for fresh JSON reports")
    a = ap.parse_args(argv)
    return run(DecompositionConfig(p_max=a.p_max, write_dir=a.write))


if __name__ == "__main__":
    sys.exit(main())
