"""Brute-force every checker on small integer matrices.

The seeded generators build instances with a lot of structure.  This probe
samples entries from a tiny alphabet instead, keeps the samples that pass a
result's hypotheses, and tallies verdicts.  Any VIOLATION is printed in full.

    python3 scripts/probe_small_integer.py --samples 20000 --size 2
"""

from __future__ import annotations

import argparse
import json
import random
from collections import Counter
from dataclasses import asdict, dataclass

from starcore.lab.checkers import run_checker
from starcore.lab.report import TheoremId, Verdict
from starcore.matrix import Matrix


@dataclass(frozen=True)
class ProbeConfig:
    samples: int = 20000
    size: int = 2
    seed: int = 0
    alphabet: tuple = (-1, 0, 0, 1, 2)
    lambdas: tuple = ("1", "-1", "i")


def small(rng, m, n, alphabet) -> Matrix:
    return Matrix([[rng.choice(alphabet) for _ in range(n)] for _ in range(m)], shape=(m, n))


def projection(rng, n) -> Matrix:
    return Matrix.diag([rng.choice((0, 1)) for _ in range(n)])


def sample(theorem: TheoremId, rng: random.Random, cfg: ProbeConfig) -> dict:
    n, alpha = cfg.size, cfg.alphabet
    if theorem in (TheoremId.L2_1, TheoremId.L2_2, TheoremId.L2_3):
        p = projection(rng, n)
        a = small(rng, n, n, alpha)
        # zero the upper corner so the triangular hypothesis has a chance
        return {"p": p, "a": a - p @ a @ (Matrix.identity(n) - p)}
    if theorem in (TheoremId.L4_1, TheoremId.T4_3, TheoremId.C4_4):
        m, k = rng.randint(1, n), rng.randint(1, n)
        return {"a": small(rng, m, m, alpha), "b": small(rng, m, k, alpha),
                "c": small(rng, k, m, alpha), "d": small(rng, k, k, alpha),
                "lambda": rng.choice(cfg.lambdas)}
    args = {"a": small(rng, n, n, alpha), "b": small(rng, n, n, alpha)}
    if theorem is TheoremId.L4_2:
        args["lambda"] = rng.choice(cfg.lambdas)
    return args


def probe(cfg: ProbeConfig) -> dict:
    out = {}
    for theorem in TheoremId:
        rng = random.Random(f"{cfg.seed}:{theorem.value}")
        tally = Counter()
        first = None
        for _ in range(cfg.samples):
            args = sample(theorem, rng, cfg)
            verdict = run_checker(theorem, args).verdict
            tally[verdict.value] += 1
            if verdict is Verdict.VIOLATION and first is None:
                first = {k: (v.tolist() if isinstance(v, Matrix) else v) for k, v in args.items()}
        out[theorem.value] = {"tally": dict(tally)}
        if first is not None:
            out[theorem.value]["first_violation"] = json.loads(json.dumps(first, default=str))
    return out


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--samples", type=int, default=ProbeConfig.samples)
    parser.add_argument("--size", type=int, default=ProbeConfig.size)
    parser.add_argument("--seed", type=int, default=ProbeConfig.seed)
    args = parser.parse_args(argv)
    cfg = ProbeConfig(args.samples, args.size, args.seed)
    print(json.dumps({"config": asdict(cfg), "results": probe(cfg)}, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
