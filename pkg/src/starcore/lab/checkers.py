"""Hypothesis checkers and side evaluators for every result in the lab.

Each ``check_*`` function evaluates the hypotheses first and returns a
HypothesisFailed report without touching the conclusion when a required
one fails.  Mathematically meaningful failures are reported, never raised;
only malformed input (shape errors, a zero lambda) raises.

Over matrices "core invertible" and "group invertible" coincide, and every
square matrix has a Drazin inverse, so Drazin-existence hypotheses are
recorded as holding with a note.
"""

from __future__ import annotations

from ..errors import CertificateError, DimensionMismatch, HypothesisFailed, ZeroLambda
from ..geninv import (
    core_inverse_ep_sum,
    core_inverse_triangular,
    core_or_none,
    drazin_inverse,
    group_inverse_triangular,
    group_or_none,
    is_core_invertible,
    is_ep,
    pi,
)
from ..matrix import Matrix, complement, is_idempotent, is_invertible, is_projection
from ..scalar import GaussianRational
from .report import Condition, TheoremId, TheoremReport, decide

DRAZIN_NOTE = "vacuous: every square matrix over a field has a Drazin inverse"
HALF_NOTE = "vacuous: the scalars contain 1/2"


def _square_pair(a: Matrix, b: Matrix) -> None:
    if not a.is_square or a.shape != b.shape:
        raise DimensionMismatch(f"expected two square matrices of equal size, got {a.shape} and {b.shape}")


def _block_shapes(A: Matrix, B: Matrix | None, C: Matrix, D: Matrix) -> None:
    if not (A.is_square and D.is_square):
        raise DimensionMismatch("A and D must be square")
    m, n = A.rows, D.rows
    if C.shape != (n, m):
        raise DimensionMismatch(f"C must be {n}x{m}, got {C.rows}x{C.cols}")
    if B is not None and B.shape != (m, n):
        raise DimensionMismatch(f"B must be {m}x{n}, got {B.rows}x{B.cols}")


def _lam(value) -> GaussianRational:
    lam = GaussianRational.coerce(value)
    if not lam:
        raise ZeroLambda()
    return lam


def _zero(m: Matrix) -> bool:
    return m.is_zero()


def _g(a: Matrix) -> Matrix:
    """Group inverse, assumed to exist."""
    g = group_or_none(a)
    if g is None:
        raise CertificateError("group inverse requested for a matrix that has none")
    return g


def _construction_agrees(build) -> bool:
    try:
        build()
    except (CertificateError, HypothesisFailed):
        return False
    return True


# projection splittings ---------------------------------------------------------

def check_lemma_2_1(p: Matrix, a: Matrix) -> TheoremReport:
    """(a p^pi)(a p^pi)^# = (a a^#) p^pi for idempotent p with p a p^pi = 0."""
    _square_pair(p, a)
    q = complement(p)
    hyps = [
        Condition("p^2 = p", is_idempotent(p)),
        Condition("a in R^#", group_or_none(a) is not None),
        Condition("p a p^pi = 0", _zero(p @ a @ q)),
        Condition("a p^pi in R^#", group_or_none(a @ q) is not None),
    ]
    if not all(c.holds for c in hyps):
        return decide(TheoremId.L2_1, hyps)
    aq = a @ q
    side2 = [Condition("(a p^pi)(a p^pi)^# = (a a^#) p^pi", aq @ _g(aq) == a @ _g(a) @ q)]
    return decide(TheoremId.L2_1, hyps, side2=side2)


def check_lemma_2_2(p: Matrix, x: Matrix) -> TheoremReport:
    """x = [[a, 0], [b, d]]_p with a^# existing: x^# exists iff d^# exists and d^pi b a^pi = 0."""
    _square_pair(p, x)
    q = complement(p)
    hyps = [
        Condition("p is a projection", is_projection(p)),
        Condition("p x p^pi = 0", _zero(p @ x @ q)),
        Condition("a := pxp in R^#", group_or_none(p @ x @ p) is not None),
    ]
    if not all(c.holds for c in hyps):
        return decide(TheoremId.L2_2, hyps)
    a, b, d = p @ x @ p, q @ x @ p, q @ x @ q
    side1 = [Condition("x in R^#", group_or_none(x) is not None)]
    side2 = [
        Condition("d in R^#", group_or_none(d) is not None),
        Condition("d^pi b a^pi = 0", _zero(pi(d) @ b @ pi(a))),
    ]
    checks = []
    if side1[0].holds and all(c.holds for c in side2):
        checks.append(Condition("z-formula x^# equals the general group inverse",
                                _construction_agrees(lambda: group_inverse_triangular(p, x))))
    return decide(TheoremId.L2_2, hyps, side1, side2, checks)


def check_lemma_2_3(p: Matrix, a: Matrix) -> TheoremReport:
    """Lower triangular a with core invertible corners has a core inverse with p a^core p^pi = 0."""
    _square_pair(p, a)
    q = complement(p)
    aq = a @ q
    corner_core = is_core_invertible(aq)
    hyps = [
        Condition("p is a projection", is_projection(p)),
        Condition("p a p^pi = 0", _zero(p @ a @ q)),
        Condition("pap in R^core", is_core_invertible(p @ a @ p)),
        Condition("a p^pi in R^core", corner_core),
        Condition("(a p^pi)^pi p^pi a p = 0", corner_core and _zero(pi(aq) @ q @ a @ p)),
    ]
    if not all(c.holds for c in hyps):
        return decide(TheoremId.L2_3, hyps)
    xc = core_or_none(a)
    side2 = [
        Condition("a in R^core", xc is not None),
        Condition("p a^core p^pi = 0", xc is not None and _zero(p @ xc @ q)),
    ]
    checks = [Condition("triangular construction equals the general core inverse",
                        _construction_agrees(lambda: core_inverse_triangular(p, a)))]
    return decide(TheoremId.L2_3, hyps, side2=side2, checks=checks)


def check_lemma_2_4(a: Matrix, b: Matrix) -> TheoremReport:
    """EP a, core invertible b, a b a^pi = 0: conditions (1) and (2) on a+b must agree."""
    _square_pair(a, b)
    a_pi = pi(a)
    hyps = [
        Condition("a is EP", is_ep(a)),
        Condition("b in R^core", is_core_invertible(b)),
        Condition("a^pi b in R^D", True, DRAZIN_NOTE),
        Condition("a b a^pi = 0", _zero(a @ b @ a_pi)),
    ]
    if not all(c.holds for c in hyps):
        return decide(TheoremId.L2_4, hyps)
    s = a + b
    sc = core_or_none(s)
    side1 = [
        Condition("a+b in R^core", sc is not None),
        Condition("a (a+b)^core a^pi = 0", sc is not None and _zero(a @ sc @ a_pi)),
    ]
    side2 = [
        Condition("a(1+a^# b) in R^core", is_core_invertible(a + a @ _g(a) @ b)),
        Condition("b^pi a^pi b = 0", _zero(pi(b) @ a_pi @ b)),
    ]
    checks = []
    if all(c.holds for c in side2):
        checks.append(Condition("triangular construction of (a+b)^core equals the general one",
                                _construction_agrees(lambda: core_inverse_ep_sum(a, b))))
    return decide(TheoremId.L2_4, hyps, side1, side2, checks)


# sums of EP elements ----------------------------------------------------------

def _ep_pair_hypotheses(a: Matrix, b: Matrix) -> list[Condition]:
    return [
        Condition("a is EP", is_ep(a)),
        Condition("b is EP", is_ep(b)),
        Condition("a^pi b in R^D", True, DRAZIN_NOTE),
        Condition("b^pi a in R^D", True, DRAZIN_NOTE),
    ]


def _mixed_sum(a: Matrix, b: Matrix) -> Matrix:
    """a a^# b + b b^# a."""
    return a @ _g(a) @ b + b @ _g(b) @ a


def check_theorem_3_1(a: Matrix, b: Matrix) -> TheoremReport:
    _square_pair(a, b)
    hyps = _ep_pair_hypotheses(a, b)
    a_pi, b_pi = pi(a), pi(b)
    hyps += [
        Condition("a b a^pi = 0", _zero(a @ b @ a_pi)),
        Condition("b a b^pi = 0", _zero(b @ a @ b_pi)),
    ]
    if not all(c.holds for c in hyps):
        return decide(TheoremId.T3_1, hyps)
    sc = core_or_none(a + b)
    side1 = [
        Condition("a+b in R^core", sc is not None),
        Condition("a (a+b)^core a^pi = 0", sc is not None and _zero(a @ sc @ a_pi)),
        Condition("b (a+b)^core b^pi = 0", sc is not None and _zero(b @ sc @ b_pi)),
    ]
    side2 = [
        Condition("a a^# b + b b^# a in R^core", is_core_invertible(_mixed_sum(a, b))),
        Condition("a^pi b^pi a = 0", _zero(a_pi @ b_pi @ a)),
        Condition("b^pi a^pi b = 0", _zero(b_pi @ a_pi @ b)),
    ]
    return decide(TheoremId.T3_1, hyps, side1, side2)


def check_corollary_3_2(a: Matrix, b: Matrix) -> TheoremReport:
    _square_pair(a, b)
    hyps = _ep_pair_hypotheses(a, b)
    if not (hyps[0].holds and hyps[1].holds):
        return decide(TheoremId.C3_2, hyps)
    aab = a @ _g(a) @ b
    hyps += [
        Condition("a a^# b = b b^# a", aab == b @ _g(b) @ a),
        Condition("a a^# b in R^core", is_core_invertible(aab)),
        Condition("1/2 in R", True, HALF_NOTE),
    ]
    if not all(c.holds for c in hyps):
        return decide(TheoremId.C3_2, hyps)
    a_pi, b_pi = pi(a), pi(b)
    side2 = [Condition("a+b in R^core", is_core_invertible(a + b))]
    checks = [
        Condition("a b a^pi = 0", _zero(a @ b @ a_pi)),
        Condition("b a b^pi = 0", _zero(b @ a @ b_pi)),
        Condition("a^pi b^pi a = 0", _zero(a_pi @ b_pi @ a)),
        Condition("b^pi a^pi b = 0", _zero(b_pi @ a_pi @ b)),
        Condition("a a^# b + b b^# a in R^core", is_core_invertible(_mixed_sum(a, b))),
    ]
    return decide(TheoremId.C3_2, hyps, side2=side2, checks=checks)


def check_corollary_3_3(a: Matrix, b: Matrix) -> TheoremReport:
    _square_pair(a, b)
    hyps = [
        Condition("a is EP", is_ep(a)),
        Condition("b is EP", is_ep(b)),
        Condition("ab = ba", a @ b == b @ a),
        Condition("a^* b = b a^*", a.star() @ b == b @ a.star()),
    ]
    if not all(c.holds for c in hyps):
        return decide(TheoremId.C3_3, hyps)
    side1 = [Condition("a+b in R^core", is_core_invertible(a + b))]
    side2 = [Condition("a a^# b + b b^# a in R^core", is_core_invertible(_mixed_sum(a, b)))]
    checks = [
        Condition("a b a^pi = 0", _zero(a @ b @ pi(a))),
        Condition("b a b^pi = 0", _zero(b @ a @ pi(b))),
    ]
    return decide(TheoremId.C3_3, hyps, side1, side2, checks)


# block matrices --------------------------------------------------------------

def check_lemma_4_1(A: Matrix, B_unused: Matrix | None, C: Matrix, D: Matrix) -> TheoremReport:
    """[[A, 0], [C, D]] is core invertible when A, D are and D^pi C = 0.

    The B slot keeps the block-checker call shape uniform and is ignored.
    """
    _block_shapes(A, None, C, D)
    hyps = [
        Condition("A in R^core", is_core_invertible(A)),
        Condition("D in R^core", is_core_invertible(D)),
        Condition("D^pi C = 0", _zero(pi(D) @ C)),
    ]
    if not all(c.holds for c in hyps):
        return decide(TheoremId.L4_1, hyps)
    m = Matrix.block([[A, Matrix.zeros(A.rows, D.rows)], [C, D]])
    side2 = [Condition("[[A, 0], [C, D]] in R^core", is_core_invertible(m))]
    return decide(TheoremId.L4_1, hyps, side2=side2)


def check_lemma_4_2(A: Matrix, B: Matrix, lam) -> TheoremReport:
    _square_pair(A, B)
    lam = _lam(lam)
    hyps = [
        Condition("A is EP", is_ep(A)),
        Condition("B is EP", is_ep(B)),
        Condition("AB = lambda BA", A @ B == (B @ A) * lam),
    ]
    if not all(c.holds for c in hyps):
        return decide(TheoremId.L4_2, hyps)
    hyps.append(Condition("A A^# B + B B^# A in R^core", is_core_invertible(_mixed_sum(A, B))))
    if not hyps[-1].holds:
        return decide(TheoremId.L4_2, hyps)
    a_pi, b_pi = pi(A), pi(B)
    side2 = [Condition("A+B in R^core", is_core_invertible(A + B))]
    checks = [
        Condition("A B A^pi = 0", _zero(A @ B @ a_pi)),
        Condition("B A B^pi = 0", _zero(B @ A @ b_pi)),
        Condition("A^pi B^pi A = 0", _zero(a_pi @ b_pi @ A)),
        Condition("B^pi A^pi B = 0", _zero(b_pi @ a_pi @ B)),
    ]
    return decide(TheoremId.L4_2, hyps, side2=side2, checks=checks)


def _block_matrix(A, B, C, D) -> Matrix:
    return Matrix.block([[A, B], [C, D]])


def _q_identities(B: Matrix, C: Matrix, cb_ep: bool) -> list[Condition]:
    """Identities of Q = [[0, B], [C, 0]] used on the way to the block result."""
    m, n = B.rows, B.cols
    q = _block_matrix(Matrix.zeros(m), B, C, Matrix.zeros(n))
    q_d = drazin_inverse(q).inverse
    q_pi = pi(q)
    conds = [
        Condition("Q^D = Q (Q^2)^D", q_d == q @ drazin_inverse(q @ q).inverse),
        Condition("Q Q^pi = 0", _zero(q @ q_pi)),
    ]
    if cb_ep:
        qg = group_or_none(q)
        conds.append(Condition("(Q Q^#)^* = Q Q^#", qg is not None and (q @ qg).star() == q @ qg))
    return conds


def check_theorem_4_3(A: Matrix, B: Matrix, C: Matrix, D: Matrix, lam) -> TheoremReport:
    _block_shapes(A, B, C, D)
    lam = _lam(lam)
    bc, cb = B @ C, C @ B
    bc_pi, cb_pi = pi(bc), pi(cb)
    cb_ep = is_ep(cb)
    hyps = [
        Condition("A is EP", is_ep(A)),
        Condition("D is EP", is_ep(D)),
        Condition("BC is EP", is_ep(bc)),
        Condition("CB is EP", cb_ep, "not among the stated hypotheses; the argument uses it", required=False),
        Condition("(BC)^pi A = 0", _zero(bc_pi @ A)),
        Condition("C (BC)^pi = 0", _zero(C @ bc_pi)),
        Condition("(CB)^pi D = 0", _zero(cb_pi @ D)),
        Condition("B (CB)^pi = 0", _zero(B @ cb_pi)),
        Condition("AB = lambda BD", A @ B == (B @ D) * lam),
        Condition("DC = lambda CA", D @ C == (C @ A) * lam),
    ]
    if not all(c.holds for c in hyps if c.required):
        return decide(TheoremId.T4_3, hyps)
    side2 = [Condition("M = [[A, B], [C, D]] in R^core", is_core_invertible(_block_matrix(A, B, C, D)))]
    checks = _q_identities(B, C, cb_ep)
    if cb_ep:
        zm, zn = Matrix.zeros(A.rows, D.rows), Matrix.zeros(D.rows, A.rows)
        p = _block_matrix(A, zm, zn, D)
        q = _block_matrix(Matrix.zeros(A.rows), B, C, Matrix.zeros(D.rows))
        checks.append(Condition("P P^# Q + Q Q^# P in R^core", is_core_invertible(_mixed_sum(p, q))))
    return decide(TheoremId.T4_3, hyps, side2=side2, checks=checks)


def check_corollary_4_4(A: Matrix, B: Matrix, C: Matrix, D: Matrix, lam) -> TheoremReport:
    _block_shapes(A, B, C, D)
    lam = _lam(lam)
    hyps = [
        Condition("A is EP", is_ep(A)),
        Condition("D is EP", is_ep(D)),
        Condition("BC is invertible", is_invertible(B @ C)),
        Condition("AB = lambda BD", A @ B == (B @ D) * lam),
        Condition("DC = lambda CA", D @ C == (C @ A) * lam),
    ]
    if not all(c.holds for c in hyps):
        return decide(TheoremId.C4_4, hyps)
    side2 = [Condition("M = [[A, B], [C, D]] in R^core", is_core_invertible(_block_matrix(A, B, C, D)))]
    checks = []
    if A.rows == D.rows:
        checks.append(Condition("CB is invertible", is_invertible(C @ B)))
    return decide(TheoremId.C4_4, hyps, side2=side2, checks=checks)


CHECKERS = {
    TheoremId.L2_1: check_lemma_2_1,
    TheoremId.L2_2: check_lemma_2_2,
    TheoremId.L2_3: check_lemma_2_3,
    TheoremId.L2_4: check_lemma_2_4,
    TheoremId.T3_1: check_theorem_3_1,
    TheoremId.C3_2: check_corollary_3_2,
    TheoremId.C3_3: check_corollary_3_3,
    TheoremId.L4_1: check_lemma_4_1,
    TheoremId.L4_2: check_lemma_4_2,
    TheoremId.T4_3: check_theorem_4_3,
    TheoremId.C4_4: check_corollary_4_4,
}

# argument names, in call order, for each checker
SIGNATURES = {
    TheoremId.L2_1: ("p", "a"),
    TheoremId.L2_2: ("p", "a"),
    TheoremId.L2_3: ("p", "a"),
    TheoremId.L2_4: ("a", "b"),
    TheoremId.T3_1: ("a", "b"),
    TheoremId.C3_2: ("a", "b"),
    TheoremId.C3_3: ("a", "b"),
    TheoremId.L4_1: ("a", "b?", "c", "d"),
    TheoremId.L4_2: ("a", "b", "lambda"),
    TheoremId.T4_3: ("a", "b", "c", "d", "lambda"),
    TheoremId.C4_4: ("a", "b", "c", "d", "lambda"),
}


def run_checker(theorem: TheoremId, args: dict) -> TheoremReport:
    """Call the checker for ``theorem`` with arguments keyed as in SIGNATURES."""
    values = []
    for name in SIGNATURES[theorem]:
        optional = name.endswith("?")
        key = name.rstrip("?")
        if key not in args or args[key] is None:
            if optional:
                values.append(None)
                continue
            raise ValueError(f"{theorem.value} needs argument {key!r}")
        values.append(args[key])
    return CHECKERS[theorem](*values)
