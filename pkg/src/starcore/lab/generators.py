"""Seeded instance families for the theorem checkers.

Every family is a function ``(rng, size) -> Instance`` built from small
Gaussian-rational entries.  ``draw`` resamples a family until the target
checker accepts its hypotheses, giving up after ``MAX_RETRIES`` draws.

Unitary changes of basis are exact: products of Pythagorean rotations
``[[a, -b], [b, a]] / c``, signed permutations and phases from
{1, -1, i, -i, (3+4i)/5}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import GenerationExhausted
from ..geninv import group_or_none, is_ep
from ..matrix import Matrix, inverse, rank
from ..scalar import GaussianRational
from .checkers import run_checker
from .report import TheoremId, TheoremReport, Verdict

MAX_RETRIES = 100

PYTHAGOREAN = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25))
PHASES = (GaussianRational(1), GaussianRational(-1), GaussianRational(0, 1),
          GaussianRational(0, -1), GaussianRational("3/5", "4/5"))


@dataclass
class Instance:
    family: str
    matrices: dict[str, Matrix]
    lam: GaussianRational | None = None
    params: dict = field(default_factory=dict)

    def checker_args(self) -> dict:
        args = dict(self.matrices)
        if self.lam is not None:
            args["lambda"] = self.lam
        return args

    def to_json_obj(self) -> dict:
        obj = {
            "family": self.family,
            "params": self.params,
            "matrices": {k: v.to_json_obj() for k, v in self.matrices.items()},
        }
        if self.lam is not None:
            obj["lambda"] = str(self.lam)
        return obj

    @classmethod
    def from_json_obj(cls, obj) -> "Instance":
        lam = obj.get("lambda")
        return cls(obj["family"], {k: Matrix.from_json_obj(v) for k, v in obj["matrices"].items()},
                   GaussianRational.coerce(lam) if lam is not None else None, obj.get("params", {}))


# random building blocks ----------------------------------------------------

def rand_scalar(rng: random.Random, bound: int = 3, complex_prob: float = 0.4,
                nonzero: bool = False) -> GaussianRational:
    while True:
        re = _rand_rational(rng, bound)
        im = _rand_rational(rng, bound) if rng.random() < complex_prob else 0
        z = GaussianRational(re, im)
        if z or not nonzero:
            return z


def _rand_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.choice((1, 1, 1, 2, 3)))


def rand_matrix(rng: random.Random, m: int, n: int, density: float = 0.8, **kw) -> Matrix:
    return Matrix([[rand_scalar(rng, **kw) if rng.random() < density else 0 for _ in range(n)]
                   for _ in range(m)], shape=(m, n))


def rand_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        a = rand_matrix(rng, n, n, density=0.9)
        if rank(a) == n:
            return a


def rand_full_column_rank(rng: random.Random, n: int, r: int) -> Matrix:
    while True:
        q = rand_matrix(rng, n, r, density=0.9)
        if rank(q) == r:
            return q


def rand_nilpotent(rng: random.Random, n: int) -> Matrix:
    """Strictly upper triangular with random entries (possibly zero)."""
    return Matrix([[rand_scalar(rng) if j > i and rng.random() < 0.7 else 0 for j in range(n)]
                   for i in range(n)], shape=(n, n))


def direct_sum(*blocks: Matrix) -> Matrix:
    sizes = [(b.rows, b.cols) for b in blocks]
    grid = []
    for i, b in enumerate(blocks):
        row = [b if i == j else Matrix.zeros(sizes[i][0], sizes[j][1]) for j in range(len(blocks))]
        grid.append(row)
    if not grid:
        return Matrix.zeros(0)
    return Matrix.block(grid)


def rand_similarity(rng: random.Random, core: Matrix) -> Matrix:
    s = rand_invertible(rng, core.rows)
    return s @ core @ inverse(s)


def rand_index_one(rng: random.Random, n: int, r: int | None = None) -> Matrix:
    """A matrix of index at most one (hence core invertible) and rank r."""
    r = rng.randint(0, n) if r is None else r
    core = direct_sum(rand_invertible(rng, r), Matrix.zeros(n - r))
    return rand_similarity(rng, core) if rng.random() < 0.7 else core


def rand_any_square(rng: random.Random, n: int) -> Matrix:
    """Square matrix with a random invertible part and a random nilpotent part."""
    r = rng.randint(0, n)
    core = direct_sum(rand_invertible(rng, r), rand_nilpotent(rng, n - r))
    return rand_similarity(rng, core)


def rand_unitary(rng: random.Random, n: int, rotations: int | None = None) -> Matrix:
    perm = list(range(n))
    rng.shuffle(perm)
    u = Matrix([[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)], shape=(n, n))
    u = Matrix.diag([rng.choice(PHASES) for _ in range(n)]) @ u
    if n < 2:
        return u
    for _ in range(rng.randint(1, max(1, n - 1)) if rotations is None else rotations):
        i, j = rng.sample(range(n), 2)
        a, b, c = rng.choice(PYTHAGOREAN[:2])
        if rng.random() < 0.5:
            a, b = b, a
        rows = [[1 if x == y else 0 for y in range(n)] for x in range(n)]
        rows[i][i] = rows[j][j] = GaussianRational(a) / c
        rows[i][j] = GaussianRational(-b) / c
        rows[j][i] = GaussianRational(b) / c
        u = Matrix(rows, shape=(n, n)) @ u
    return u


def rand_ep(rng: random.Random, n: int, r: int) -> Matrix:
    """Q S Q^* with Q of full column rank r and S invertible: EP of rank r."""
    if r == 0:
        return Matrix.zeros(n)
    q = rand_full_column_rank(rng, n, r)
    s = rand_invertible(rng, r)
    return q @ s @ q.star()


def _conj(u: Matrix, x: Matrix) -> Matrix:
    return u @ x @ u.star()


def _split(rng: random.Random, n: int, parts: int, minimum: int = 0) -> list[int]:
    """Random composition of n into ``parts`` non-negative sizes."""
    sizes = [minimum] * parts
    for _ in range(n - minimum * parts):
        sizes[rng.randrange(parts)] += 1
    return sizes


# families --------------------------------------------------------------------

def family_ep(rng: random.Random, n: int, r: int | None = None) -> Instance:
    r = rng.randint(0, n) if r is None else r
    return Instance("ep", {"a": rand_ep(rng, n, r)}, params={"n": n, "rank": r})


def family_commuting_ep_pair(rng: random.Random, n: int) -> Instance:
    """a = U diag(Sa) U^*, b = U diag(Sb) U^* with aligned blocks.

    Blocks are 1x1 scalars (possibly zero) or alpha*I paired with
    beta*I + N, N strictly upper triangular and beta != 0; beta = -alpha
    makes the block of a+b nilpotent.
    """
    a_blocks, b_blocks = [], []
    left = n
    while left:
        k = rng.randint(1, min(3, left)) if rng.random() < 0.4 else 1
        left -= k
        if k == 1:
            a_blocks.append(Matrix([[rand_scalar(rng) if rng.random() < 0.7 else 0]]))
            b_blocks.append(Matrix([[rand_scalar(rng) if rng.random() < 0.7 else 0]]))
            continue
        alpha = rand_scalar(rng) if rng.random() < 0.8 else GaussianRational(0)
        beta = -alpha if alpha and rng.random() < 0.5 else rand_scalar(rng, nonzero=True)
        plain, shifted = Matrix.scalar(alpha, k), Matrix.scalar(beta, k) + rand_nilpotent(rng, k)
        if rng.random() < 0.5:
            plain, shifted = shifted, plain
        a_blocks.append(plain)
        b_blocks.append(shifted)
    u = rand_unitary(rng, n)
    return Instance("commuting-ep-pair",
                    {"a": _conj(u, direct_sum(*a_blocks)), "b": _conj(u, direct_sum(*b_blocks))},
                    params={"n": n})


def family_triangular(rng: random.Random, n: int) -> Instance:
    """p = U diag(I_k, 0) U^* and x = U [[X1, 0], [X3, X4]] U^*."""
    k = rng.randint(0, n)
    u = rand_unitary(rng, n)
    x1 = rand_index_one(rng, k)
    x4 = rand_index_one(rng, n - k) if rng.random() < 0.6 else rand_any_square(rng, n - k)
    if rng.random() < 0.6:
        x3 = x4 @ rand_matrix(rng, n - k, k)
    else:
        x3 = rand_matrix(rng, n - k, k, density=0.6)
    x = Matrix.block([[x1, Matrix.zeros(k, n - k)], [x3, x4]])
    p = direct_sum(Matrix.identity(k), Matrix.zeros(n - k))
    return Instance("triangular", {"p": _conj(u, p), "a": _conj(u, x)}, params={"n": n, "k": k})


def family_idempotent_lower(rng: random.Random, n: int) -> Instance:
    """Oblique idempotent p = S diag(I, 0) S^-1 with a lower triangular relative to p."""
    k = rng.randint(0, n)
    s = rand_invertible(rng, n)
    s_inv = inverse(s)
    a1, a4 = rand_index_one(rng, k), rand_index_one(rng, n - k)
    a3 = a4 @ rand_matrix(rng, n - k, k) if rng.random() < 0.7 else rand_matrix(rng, n - k, k)
    a = Matrix.block([[a1, Matrix.zeros(k, n - k)], [a3, a4]])
    p = direct_sum(Matrix.identity(k), Matrix.zeros(n - k))
    return Instance("idempotent-lower", {"p": s @ p @ s_inv, "a": s @ a @ s_inv},
                    params={"n": n, "k": k})


def family_ep_lower_pair(rng: random.Random, n: int) -> Instance:
    """a = U diag(S, 0) U^* EP; b lower triangular relative to a a^#."""
    r = rng.randint(0, n)
    u = rand_unitary(rng, n)
    s = rand_invertible(rng, r)
    if rng.random() < 0.5:
        e = rand_any_square(rng, r) if rng.random() < 0.5 else rand_index_one(rng, r)
        b1 = e - s
    else:
        b1 = rand_index_one(rng, r)
    b4 = rand_index_one(rng, n - r) if rng.random() < 0.7 else rand_any_square(rng, n - r)
    b3 = b4 @ rand_matrix(rng, n - r, r) if rng.random() < 0.6 else rand_matrix(rng, n - r, r, density=0.5)
    a = direct_sum(s, Matrix.zeros(n - r))
    b = Matrix.block([[b1, Matrix.zeros(r, n - r)], [b3, b4]])
    return Instance("ep-lower-pair", {"a": _conj(u, a), "b": _conj(u, b)}, params={"n": n, "r": r})


def family_block_ep_pair(rng: random.Random, n: int, shared: bool = False) -> Instance:
    """a = diag(A1, A2, 0, 0), b = diag(B1, 0, B3, 0) in a random unitary basis.

    A1, A2, B1, B3 are invertible.  With ``shared`` B1 = A1 is any EP block
    (so a a^# b = b b^# a); otherwise B1 = E - A1 for a random E, which
    controls whether the corner of a+b is core invertible.
    """
    s1, s2, s3, s4 = _split(rng, n, 4)
    u = rand_unitary(rng, n)
    if shared:
        a1 = rand_ep(rng, s1, rng.randint(0, s1))
        b1 = a1
    else:
        while True:
            a1 = rand_invertible(rng, s1)
            e = rand_any_square(rng, s1) if rng.random() < 0.5 else rand_index_one(rng, s1)
            b1 = e - a1
            if rank(b1) == s1:
                break
    a = direct_sum(a1, rand_invertible(rng, s2), Matrix.zeros(s3 + s4))
    b = direct_sum(b1, Matrix.zeros(s2), rand_invertible(rng, s3), Matrix.zeros(s4))
    return Instance("block-ep-pair", {"a": _conj(u, a), "b": _conj(u, b)},
                    params={"n": n, "blocks": [s1, s2, s3, s4], "shared": shared})


_PAULI_Z = Matrix([[1, 0], [0, -1]])
_PAULI_X = Matrix([[0, 1], [1, 0]])
_CLOCK = Matrix.diag([1, "i", -1, "-i"])
_SHIFT = Matrix([[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])


def family_lambda_commuting_pair(rng: random.Random, n: int) -> Instance:
    """EP pair with A B = lambda B A for lambda in {1, -1, i}.

    lambda = -1 uses scaled Pauli pairs (Z, X); lambda = i uses the 4x4
    clock and shift pair; leftover 1x1 blocks carry at most one nonzero.
    """
    choices = [1, -1] + (["i"] if n >= 4 else [])
    lam = GaussianRational.coerce(rng.choice(choices))
    if lam == 1:
        inst = family_commuting_ep_pair(rng, n)
        return Instance("lambda-commuting-pair", inst.matrices, lam, {"n": n, "lambda": "1"})
    a_blocks, b_blocks = [], []
    left = n
    big = 4 if lam == GaussianRational(0, 1) else 2
    pair = (_CLOCK, _SHIFT) if big == 4 else (_PAULI_Z, _PAULI_X)
    while left:
        if left >= big and rng.random() < 0.7:
            alpha = rand_scalar(rng) if rng.random() < 0.9 else GaussianRational(0)
            beta = rand_scalar(rng) if rng.random() < 0.9 else GaussianRational(0)
            a_blocks.append(pair[0] * alpha)
            b_blocks.append(pair[1] * beta)
            left -= big
        else:
            z = rand_scalar(rng)
            if rng.random() < 0.5:
                a_blocks.append(Matrix([[z]]))
                b_blocks.append(Matrix([[0]]))
            else:
                a_blocks.append(Matrix([[0]]))
                b_blocks.append(Matrix([[z]]))
            left -= 1
    u = rand_unitary(rng, n)
    return Instance("lambda-commuting-pair",
                    {"a": _conj(u, direct_sum(*a_blocks)), "b": _conj(u, direct_sum(*b_blocks))},
                    lam, {"n": n, "lambda": str(lam)})


def family_block_lower(rng: random.Random, m: int, n: int) -> Instance:
    """Core invertible A, D and C = D K or D D^# K, so D^pi C = 0."""
    a = rand_index_one(rng, m)
    d = rand_index_one(rng, n)
    k = rand_matrix(rng, n, m)
    if rng.random() < 0.5:
        c = d @ k
    else:
        c = d @ group_or_none(d) @ k
    return Instance("block-lower", {"a": a, "c": c, "d": d}, params={"m": m, "n": n})


def _block_4x4_invertible(rng: random.Random, k: int):
    """Blocks with B, C invertible and lambda = +-1 satisfying AB = lam BD, DC = lam CA.

    B = s W with W unitary, D = lam^-1 B^-1 A B (EP because unitarily similar
    to A up to scale) and C = B^-1 K where K = alpha I + beta A is invertible
    and commutes with A.
    """
    lam = GaussianRational(rng.choice((1, -1)))
    a = rand_ep(rng, k, rng.randint(0, k))
    w = rand_unitary(rng, k)
    s = rand_scalar(rng, nonzero=True)
    b = w * s
    b_inv = w.star() * s.inv()
    d = b_inv @ a @ b * lam.inv()
    while True:
        kk = Matrix.scalar(rand_scalar(rng, nonzero=True), k) + a * rand_scalar(rng)
        if rank(kk) == k:
            break
    c = b_inv @ kk
    return a, b, c, d, lam


def family_block_4x4(rng: random.Random, m: int, n: int | None = None,
                     singular_bc: bool = False) -> Instance:
    """Block instances for the block-matrix results.

    Without ``singular_bc``: m = n and BC invertible.  With it, a k x k
    invertible core is padded by zero blocks to sizes m and n and rotated by
    independent unitaries U (size m) and V (size n):
    A -> U A U^*, B -> U B V^*, C -> V C U^*, D -> V D V^*.
    """
    if not singular_bc:
        a, b, c, d, lam = _block_4x4_invertible(rng, m)
        return Instance("block-4x4", {"a": a, "b": b, "c": c, "d": d}, lam,
                        {"m": m, "n": m, "singular_bc": False})
    n = m if n is None else n
    k = rng.randint(0, min(m, n))
    a1, b1, c1, d1, lam = _block_4x4_invertible(rng, k) if k else (
        Matrix.zeros(0), Matrix.zeros(0), Matrix.zeros(0), Matrix.zeros(0),
        GaussianRational(rng.choice((1, -1))))
    a = direct_sum(a1, Matrix.zeros(m - k))
    d = direct_sum(d1, Matrix.zeros(n - k))
    b = direct_sum(b1, Matrix.zeros(m - k, n - k))
    c = direct_sum(c1, Matrix.zeros(n - k, m - k))
    u, v = rand_unitary(rng, m), rand_unitary(rng, n)
    return Instance("block-4x4",
                    {"a": _conj(u, a), "b": u @ b @ v.star(), "c": v @ c @ u.star(), "d": _conj(v, d)},
                    lam, {"m": m, "n": n, "singular_bc": True, "k": k})


FAMILIES = {
    "ep": family_ep,
    "commuting-ep-pair": family_commuting_ep_pair,
    "triangular": family_triangular,
    "block-4x4": family_block_4x4,
    "idempotent-lower": family_idempotent_lower,
    "ep-lower-pair": family_ep_lower_pair,
    "block-ep-pair": family_block_ep_pair,
    "lambda-commuting-pair": family_lambda_commuting_pair,
    "block-lower": family_block_lower,
}

# the checker each standalone family is filtered against
FAMILY_TARGET = {
    "commuting-ep-pair": TheoremId.C3_3,
    "triangular": TheoremId.L2_2,
    "block-4x4": TheoremId.T4_3,
    "idempotent-lower": TheoremId.L2_1,
    "ep-lower-pair": TheoremId.L2_4,
    "block-ep-pair": TheoremId.T3_1,
    "lambda-commuting-pair": TheoremId.L4_2,
    "block-lower": TheoremId.L4_1,
}


def _accepts(theorem: TheoremId, inst: Instance) -> TheoremReport | None:
    report = run_checker(theorem, inst.checker_args())
    return None if report.verdict is Verdict.HYPOTHESIS_FAILED else report


def generate(family: str, n: int, seed: int, rank: int | None = None) -> Instance:
    """One instance of ``family`` at size n, deterministic in (family, n, rank, seed).

    For block families n is the size of each diagonal block.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(sorted(FAMILIES))}")
    if n < 0 or (n == 0 and family != "ep"):
        raise ValueError("n must be positive")
    if rank is not None and family != "ep":
        raise ValueError("--rank only applies to the ep family")
    if rank is not None and not 0 <= rank <= n:
        raise ValueError("rank must lie in [0, n]")
    rng = random.Random(f"{family}:{n}:{rank}:{seed}")
    for _ in range(MAX_RETRIES):
        if family == "ep":
            inst = family_ep(rng, n, rank)
            if is_ep(inst.matrices["a"]):
                return inst
            continue
        if family in ("block-4x4", "block-lower"):
            inst = FAMILIES[family](rng, n, n)
        else:
            inst = FAMILIES[family](rng, n)
        if _accepts(FAMILY_TARGET[family], inst) is not None:
            return inst
    raise GenerationExhausted(f"family {family} produced no acceptable instance in {MAX_RETRIES} draws")


# per-theorem sampling ----------------------------------------------------------

def _sample(theorem: TheoremId, rng: random.Random, size: int) -> Instance:
    n = rng.randint(1, max(1, size))
    half = max(1, size // 2)
    if theorem is TheoremId.L2_1:
        return family_idempotent_lower(rng, n)
    if theorem in (TheoremId.L2_2, TheoremId.L2_3):
        return family_triangular(rng, n)
    if theorem is TheoremId.L2_4:
        return family_ep_lower_pair(rng, n)
    if theorem is TheoremId.T3_1:
        if rng.random() < 0.5:
            return family_commuting_ep_pair(rng, n)
        return family_block_ep_pair(rng, n)
    if theorem is TheoremId.C3_2:
        return family_block_ep_pair(rng, n, shared=True)
    if theorem is TheoremId.C3_3:
        return family_commuting_ep_pair(rng, n)
    if theorem is TheoremId.L4_1:
        return family_block_lower(rng, rng.randint(1, half), rng.randint(1, half))
    if theorem is TheoremId.L4_2:
        return family_lambda_commuting_pair(rng, n)
    if theorem is TheoremId.T4_3:
        if rng.random() < 0.5:
            return family_block_4x4(rng, rng.randint(1, half))
        return family_block_4x4(rng, rng.randint(1, half), rng.randint(1, half), singular_bc=True)
    if theorem is TheoremId.C4_4:
        return family_block_4x4(rng, rng.randint(1, half))
    raise ValueError(theorem)


def draw(theorem: TheoremId, rng: random.Random, size: int) -> tuple[Instance, TheoremReport]:
    """An instance passing the hypotheses of ``theorem``, with its report."""
    for _ in range(MAX_RETRIES):
        inst = _sample(theorem, rng, size)
        report = _accepts(theorem, inst)
        if report is not None:
            return inst, report
    raise GenerationExhausted(f"{theorem.value}: no hypothesis-satisfying instance in {MAX_RETRIES} draws")
