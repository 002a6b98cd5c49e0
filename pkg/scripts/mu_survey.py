"""Survey which tensor patterns (H, e) give a vanishing crossing weight mu.

For each pattern and each weight triple, mu is computed exactly as a
rational function of t (Cramer numerator over the system determinant), so
"vanishes" means the numerator polynomial is identically zero rather than
zero on a sample. Patterns are every catalog graph with a non-loop edge,
plus their edges as distinguished edge.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, fields
from pathlib import Path

from tgp.arrow import invariants, is_orientable
from tgp.catalog import catalog
from tgp.errors import LoopPattern
from tgp.tensor import rational_weights

WEIGHTS = {"penrose (1,0,-1)": (1, 0, -1), "ribbon (2,1,0)": (2, 1, 0), "generic (1,1,1)": (1, 1, 1)}


@dataclass
class SurveyConfig:
    max_edges: int = 4
    out: str = "results/mu_survey.csv"


def parse_args() -> SurveyConfig:
    p = argparse.ArgumentParser(description=__doc__)
    for f in fields(SurveyConfig):
        p.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    return SurveyConfig(**vars(p.parse_args()))


def survey(cfg: SurveyConfig) -> list[dict]:
    rows = []
    for ent in catalog(cfg.max_edges):
        h = ent.graph
        for e in h.edges:
            row = {"pattern": ent.name, "arrow": ent.text, "edge": e, "orientable": is_orientable(h),
                   "plane": invariants(h).plane}
            try:
                for name, (a, b, c) in WEIGHTS.items():
                    rw = rational_weights(h, e, a, b, c)
                    row[name] = "mu=0" if rw.mu.is_zero() else "mu!=0"
            except LoopPattern:
                continue
            rows.append(row)
    return rows


def main() -> int:
    cfg = parse_args()
    rows = survey(cfg)
    out = Path(cfg.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]))
        w.writeheader()
        w.writerows(rows)
    w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), delimiter="\t")
    w.writeheader()
    w.writerows(rows)
    penrose = [r for r in rows if r["penrose (1,0,-1)"] == "mu=0"]
    print(f"\n{len(penrose)}/{len(rows)} (pattern, edge) pairs have mu = 0 at the Penrose weights; table in {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
