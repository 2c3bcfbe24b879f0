"""Probe the block-matrix results outside the generator's comfort zone.

Two questions:

* block: the stated hypotheses name A, D and BC as EP but not CB.  Search small
  integer B, C for instances where every stated hypothesis holds while CB is
  not EP, and record whether M = [[A, B], [C, D]] is still core invertible and
  whether Q = [[0, B], [C, 0]] keeps Q Q^# self-adjoint.
* rect: with BC invertible and m != n, CB cannot be invertible.  Check the
  conclusion anyway on instances with m < n.

    python3 scripts/explore_block_hypotheses.py --samples 4000 --seed 0
"""

from __future__ import annotations

import argparse
import json
import random
from collections import Counter
from dataclasses import asdict, dataclass

from starcore.geninv import group_or_none, is_core_invertible, is_ep
from starcore.lab.checkers import check_corollary_4_4, check_theorem_4_3
from starcore.lab.report import Verdict
from starcore.matrix import Matrix, is_invertible


@dataclass(frozen=True)
class ProbeConfig:
    samples: int = 4000
    seed: int = 0
    max_block: int = 3
    entries: tuple[int, ...] = (-1, 0, 0, 1, 2)


def small(rng: random.Random, m: int, n: int, entries) -> Matrix:
    return Matrix([[rng.choice(entries) for _ in range(n)] for _ in range(m)], shape=(m, n))


def q_of(b: Matrix, c: Matrix) -> Matrix:
    return Matrix.block([[Matrix.zeros(b.rows), b], [c, Matrix.zeros(c.rows)]])


def companions(rng: random.Random, b: Matrix, c: Matrix):
    """(A, D, lambda) candidates satisfying AB = lam BD and DC = lam CA."""
    m, n = b.rows, b.cols
    yield Matrix.zeros(m), Matrix.zeros(n), 1
    alpha = rng.choice((1, 2, -1, "i"))
    yield Matrix.scalar(alpha, m), Matrix.scalar(alpha, n), 1


def probe_cb_not_ep(cfg: ProbeConfig) -> dict:
    rng = random.Random(f"block:{cfg.seed}")
    tally = Counter()
    example = None
    for _ in range(cfg.samples):
        m, n = rng.randint(1, cfg.max_block), rng.randint(1, cfg.max_block)
        b, c = small(rng, m, n, cfg.entries), small(rng, n, m, cfg.entries)
        if is_ep(c @ b):
            continue
        for a, d, lam in companions(rng, b, c):
            report = check_theorem_4_3(a, b, c, d, lam)
            if report.verdict is Verdict.HYPOTHESIS_FAILED:
                continue
            q = q_of(b, c)
            qg = group_or_none(q)
            tally["stated hypotheses hold, CB not EP"] += 1
            tally["M core invertible"] += report.verdict is Verdict.EQUIVALENCE_HOLDS
            tally["Q Q^# self-adjoint"] += qg is not None and (q @ qg).star() == q @ qg
            if example is None:
                example = {k: v.to_json_obj() for k, v in {"a": a, "b": b, "c": c, "d": d}.items()}
                example["lambda"] = str(lam)
    return {"tally": dict(tally), "example": example}


def probe_rectangular(cfg: ProbeConfig) -> dict:
    rng = random.Random(f"rect:{cfg.seed}")
    tally = Counter()
    for _ in range(cfg.samples):
        m = rng.randint(1, cfg.max_block - 1)
        n = rng.randint(m + 1, cfg.max_block)
        b, c = small(rng, m, n, cfg.entries), small(rng, n, m, cfg.entries)
        if not is_invertible(b @ c):
            continue
        for a, d, lam in companions(rng, b, c):
            report = check_corollary_4_4(a, b, c, d, lam)
            if report.verdict is Verdict.HYPOTHESIS_FAILED:
                continue
            tally["hypotheses hold with m < n"] += 1
            tally["CB invertible"] += is_invertible(c @ b)
            tally["M core invertible"] += is_core_invertible(Matrix.block([[a, b], [c, d]]))
            tally["VIOLATION"] += report.verdict is Verdict.VIOLATION
    return {"tally": dict(tally)}


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--samples", type=int, default=ProbeConfig.samples)
    parser.add_argument("--seed", type=int, default=ProbeConfig.seed)
    parser.add_argument("--max-block", type=int, default=ProbeConfig.max_block)
    args = parser.parse_args(argv)
    cfg = ProbeConfig(args.samples, args.seed, args.max_block)
    out = {"config": asdict(cfg), "cb_not_ep": probe_cb_not_ep(cfg), "rectangular": probe_rectangular(cfg)}
    print(json.dumps(out, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
