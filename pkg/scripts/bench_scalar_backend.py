"""Time exact matrix products and row reduction with two rational backends.

Compares gmpy2.mpq (what the package uses) against fractions.Fraction on
object arrays of the same shape.

    python3 scripts/bench_scalar_backend.py --n 8 --repeat 20
"""

from __future__ import annotations

import argparse
import random
import timeit
from fractions import Fraction

import numpy as np
from gmpy2 import mpq


def random_array(rng: random.Random, n: int, make) -> np.ndarray:
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = make(rng.randint(-20, 20), rng.randint(1, 20))
    return out


def eliminate(a: np.ndarray) -> None:
    a = a.copy()
    n = a.shape[0]
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, n) if a[r, col] != 0), None)
        if pivot is None:
            continue
        a[[row, pivot]] = a[[pivot, row]]
        a[row] = a[row] / a[row, col]
        for r in range(n):
            if r != row and a[r, col] != 0:
                a[r] = a[r] - a[r, col] * a[row]
        row += 1


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--n", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args(argv)
    for name, make in (("gmpy2.mpq", mpq), ("Fraction", Fraction)):
        rng = random.Random(0)
        a, b = random_array(rng, args.n, make), random_array(rng, args.n, make)
        matmul = timeit.timeit(lambda: a.dot(b), number=args.repeat) / args.repeat
        rref = timeit.timeit(lambda: eliminate(a), number=args.repeat) / args.repeat
        print(f"{name:10s} matmul {matmul * 1e3:7.2f} ms   rref {rref * 1e3:7.2f} ms   (n={args.n})")


if __name__ == "__main__":
    main()
