"""Estimate how often the seeded block generator lands on a failing instance.

Runs the suite for the block-matrix results over several seeds, reports the
VIOLATION count per (theorem, seed) and writes a reproducer for each seed that
produced one.

    python3 scripts/violation_rate.py --trials 1000 --seeds 0 1 2 42 --out reproducers/
"""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass

from starcore.lab.suite import run_suite


@dataclass(frozen=True)
class RateConfig:
    theorems: tuple[str, ...] = ("T4.3", "C4.4")
    seeds: tuple[int, ...] = (0, 1, 2, 42)
    trials: int = 1000
    size: int = 6
    jobs: int = 1
    out: str | None = None


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--theorems", nargs="+", default=list(RateConfig.theorems))
    parser.add_argument("--seeds", nargs="+", type=int, default=list(RateConfig.seeds))
    parser.add_argument("--trials", type=int, default=RateConfig.trials)
    parser.add_argument("--size", type=int, default=RateConfig.size)
    parser.add_argument("--jobs", type=int, default=RateConfig.jobs)
    parser.add_argument("--out", help="directory for reproducer bundles")
    args = parser.parse_args(argv)
    cfg = RateConfig(tuple(args.theorems), tuple(args.seeds), args.trials, args.size, args.jobs, args.out)

    total = hits = 0
    for theorem in cfg.theorems:
        for seed in cfg.seeds:
            result = run_suite(theorem, cfg.trials, cfg.size, seed, cfg.jobs, cfg.out)
            n = len(result.violations)
            total += cfg.trials
            hits += n
            row = {"theorem": theorem, "seed": seed, "trials": cfg.trials, "violations": n,
                   "first_trial": result.violations[0]["trial"] if n else None}
            if result.reproducer:
                row["reproducer"] = result.reproducer
            print(json.dumps(row, sort_keys=True), flush=True)
    print(json.dumps({"trials": total, "violations": hits, "rate": hits / total if total else 0.0}))


if __name__ == "__main__":
    main()
