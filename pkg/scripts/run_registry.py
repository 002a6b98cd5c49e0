"""Run the identity registry and write a JSON report plus a one-line-per-id summary."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, fields
from pathlib import Path

from tgp.verify import VerifyConfig, list_identities, reports_json, verify_identity


@dataclass
class RunConfig:
    scope: str = "catalog"
    seed: int = 42
    max_edges: int = 6
    samples: int = 20
    ids: str = ""  # comma separated; empty means all
    out: str = "results/registry.json"


def parse_args() -> RunConfig:
    p = argparse.ArgumentParser(description=__doc__)
    for f in fields(RunConfig):
        p.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    return RunConfig(**vars(p.parse_args()))


def main() -> int:
    cfg = parse_args()
    vcfg = VerifyConfig(scope=cfg.scope, seed=cfg.seed, max_edges=cfg.max_edges, samples=cfg.samples)
    ids = [i for i in cfg.ids.split(",") if i] or [i for i, _ in list_identities()]
    reports = []
    for ident in ids:
        t0 = time.perf_counter()
        rep = verify_identity(ident, vcfg.scope, vcfg)
        reports.append(rep)
        ok = len(rep.cases) - len(rep.failures)
        print(f"{'PASS' if rep.passed else 'FAIL'} {ident:11s} {ok:5d}/{len(rep.cases):<5d} "
              f"{time.perf_counter() - t0:6.2f}s  {rep.description}")
    out = Path(cfg.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(reports_json(reports) + "\n")
    print(f"report written to {out}")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
