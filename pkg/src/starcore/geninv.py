"""Generalized inverses of exact matrices.

Every public constructor returns a :class:`GenInverse` whose certificate
lists the defining equations that were checked exactly against the input.
A computed inverse that fails its own equations raises
:class:`~starcore.errors.CertificateError`; that is a bug, never a user
error.

All inverses route through full-rank factorizations ``A = F G``:

* group:          ``F (G F)^-2 G``
* Drazin:         Cline's recursion ``F1..Fk (Gk Fk)^-(k+1) Gk..G1``
* Moore-Penrose:  ``G* (G G*)^-1 (F* F)^-1 F*``
* core:           ``A^# A A^(1,3)`` with the Moore-Penrose inverse as the (1,3)-inverse
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .errors import (
    CertificateError,
    DimensionMismatch,
    HypothesisFailed,
    NoGroupInverse,
    NotProjection,
    NotTriangular,
    SingularMatrix,
)
from .matrix import Matrix, complement, full_rank_factorize, inverse, is_invertible, is_projection, rank, solve_right

KINDS = ("group", "drazin", "moore-penrose", "one-three", "core")

_CACHE = 4096


@dataclass(frozen=True)
class GenInverse:
    kind: str
    inverse: Matrix
    index: int = 1
    certificate: tuple[str, ...] = ()
    parts: Mapping[str, Matrix] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown inverse kind {self.kind!r}")
        if self.kind == "group" and self.index != 1:
            raise ValueError("a group inverse always has index 1")


@dataclass(frozen=True)
class SpectralData:
    """``a^pi = I - A A^D`` together with ``A A^D`` and the Drazin index."""

    a_pi: Matrix
    aad: Matrix
    index: int


def _require_square(a: Matrix) -> None:
    if not a.is_square:
        raise DimensionMismatch(f"expected a square matrix, got {a.rows}x{a.cols}")


def defining_equations(kind: str, a: Matrix, x: Matrix, index: int = 1) -> list[tuple[str, bool]]:
    """Evaluate each defining equation of ``kind`` for the pair (a, x)."""
    if kind == "moore-penrose" or kind == "one-three":
        ax = a @ x
        eqs = [("axa=a", ax @ a == a), ("(ax)^*=ax", ax.star() == ax)]
        if kind == "moore-penrose":
            xa = x @ a
            eqs.insert(1, ("xax=x", xa @ x == x))
            eqs.append(("(xa)^*=xa", xa.star() == xa))
        return eqs
    ax, xa = a @ x, x @ a
    if kind == "group":
        return [("xa^2=a", xa @ a == a), ("ax^2=x", ax @ x == x), ("ax=xa", ax == xa)]
    if kind == "drazin":
        ak = a ** index
        return [
            (f"xa^{index + 1}=a^{index}", x @ ak @ a == ak),
            ("ax^2=x", ax @ x == x),
            ("ax=xa", ax == xa),
        ]
    if kind == "core":
        return [
            ("xa^2=a", xa @ a == a),
            ("ax^2=x", ax @ x == x),
            ("(ax)^*=ax", ax.star() == ax),
            ("axa=a", ax @ a == a),
            ("xax=x", xa @ x == x),
        ]
    raise ValueError(f"unknown inverse kind {kind!r}")


def _certify(kind: str, a: Matrix, x: Matrix, index: int = 1, parts=None) -> GenInverse:
    eqs = defining_equations(kind, a, x, index)
    failed = [name for name, ok in eqs if not ok]
    if failed:
        raise CertificateError(f"{kind} inverse violates {', '.join(failed)}")
    return GenInverse(kind, x, index, tuple(name for name, _ in eqs), dict(parts or {}))


# raw routes (cached, uncertified) -------------------------------------------

@lru_cache(maxsize=_CACHE)
def _group(a: Matrix) -> Matrix | None:
    frf = full_rank_factorize(a)
    if frf.r == 0:
        return Matrix.zeros(a.rows)
    try:
        gf_inv = inverse(frf.G @ frf.F)
    except SingularMatrix:
        return None
    return frf.F @ gf_inv @ gf_inv @ frf.G


@lru_cache(maxsize=_CACHE)
def _moore_penrose(a: Matrix) -> Matrix:
    frf = full_rank_factorize(a)
    if frf.r == 0:
        return Matrix.zeros(a.cols, a.rows)
    f, g = frf.F, frf.G
    gs, fs = g.star(), f.star()
    return gs @ inverse(g @ gs) @ inverse(fs @ f) @ fs


@lru_cache(maxsize=_CACHE)
def _cline(a: Matrix) -> Matrix:
    fs: list[Matrix] = []
    gs: list[Matrix] = []
    current = a
    for _ in range(a.rows + 1):
        frf = full_rank_factorize(current)
        if frf.r == 0:
            return Matrix.zeros(a.rows)
        fs.append(frf.F)
        gs.append(frf.G)
        gf = frf.G @ frf.F
        if rank(gf) == frf.r:
            k = len(fs)
            middle = inverse(gf) ** (k + 1)
            left = fs[0]
            for f in fs[1:]:
                left = left @ f
            right = gs[-1]
            for g in reversed(gs[:-1]):
                right = right @ g
            return left @ middle @ right
        current = gf
    raise CertificateError("Cline recursion did not terminate within the matrix dimension")


@lru_cache(maxsize=_CACHE)
def drazin_index(a: Matrix) -> int:
    """Smallest k >= 1 with rank(A^k) = rank(A^(k+1)); invertible matrices report 1."""
    _require_square(a)
    power, prev, k = a, rank(a), 1
    while True:
        power = power @ a
        r = rank(power)
        if r == prev:
            return k
        prev, k = r, k + 1


def has_group_inverse(a: Matrix) -> bool:
    _require_square(a)
    return _group(a) is not None


# public constructors ---------------------------------------------------------

@lru_cache(maxsize=_CACHE)
def _group_inverse(a: Matrix) -> GenInverse | None:
    x = _group(a)
    return None if x is None else _certify("group", a, x)


def group_inverse(a: Matrix) -> GenInverse:
    _require_square(a)
    result = _group_inverse(a)
    if result is None:
        raise NoGroupInverse()
    return result


@lru_cache(maxsize=_CACHE)
def drazin_inverse(a: Matrix) -> GenInverse:
    _require_square(a)
    return _certify("drazin", a, _cline(a), drazin_index(a))


@lru_cache(maxsize=_CACHE)
def moore_penrose(a: Matrix) -> GenInverse:
    return _certify("moore-penrose", a, _moore_penrose(a))


def one_three_inverse(a: Matrix) -> GenInverse:
    """A (1,3)-inverse; canonically the Moore-Penrose inverse."""
    return _certify("one-three", a, _moore_penrose(a))


@lru_cache(maxsize=_CACHE)
def _core_inverse(a: Matrix) -> GenInverse | None:
    g = _group(a)
    if g is None:
        return None
    return _certify("core", a, g @ a @ _moore_penrose(a))


def core_inverse(a: Matrix) -> GenInverse:
    _require_square(a)
    result = _core_inverse(a)
    if result is None:
        raise NoGroupInverse()
    return result


def core_or_none(a: Matrix) -> Matrix | None:
    _require_square(a)
    result = _core_inverse(a)
    return None if result is None else result.inverse


def group_or_none(a: Matrix) -> Matrix | None:
    _require_square(a)
    result = _group_inverse(a)
    return None if result is None else result.inverse


def is_core_invertible(a: Matrix) -> bool:
    return core_or_none(a) is not None


@lru_cache(maxsize=_CACHE)
def spectral_idempotent(a: Matrix) -> SpectralData:
    d = drazin_inverse(a)
    aad = a @ d.inverse
    return SpectralData(Matrix.identity(a.rows) - aad, aad, d.index)


def pi(a: Matrix) -> Matrix:
    """The spectral idempotent ``a^pi = I - A A^D``."""
    return spectral_idempotent(a).a_pi


@lru_cache(maxsize=_CACHE)
def is_ep(a: Matrix) -> bool:
    """Index at most one and A A^dagger = A^dagger A."""
    _require_square(a)
    g = _group(a)
    if g is None:
        return False
    mp = _moore_penrose(a)
    ep = a @ mp == mp @ a
    if ep and core_inverse(a).inverse != g:
        raise CertificateError("EP matrix whose core inverse differs from its group inverse")
    return ep


# characterizations of core invertibility ------------------------------------

def annihilating_projection(a: Matrix) -> Matrix:
    """``p = I - A A^(1,3)``: a projection with ``p A = 0``."""
    _require_square(a)
    return complement(a @ one_three_inverse(a).inverse)


def core_invertible_by_projection(a: Matrix) -> bool:
    """Core invertibility decided by invertibility of ``A + (I - A A^(1,3))``."""
    return is_invertible(a + annihilating_projection(a))


def gram_witness(a: Matrix) -> Matrix | None:
    """Some S with ``S A^* A = A`` (membership of A in the left ideal of A^* A)."""
    return solve_right(a.star() @ a, a)


# constructive triangular formulas -------------------------------------------

def _triangular_setup(p: Matrix, x: Matrix) -> Matrix:
    _require_square(x)
    if p.shape != x.shape:
        raise DimensionMismatch("p and x must have the same size")
    if not is_projection(p):
        raise NotProjection("p must satisfy p^2 = p = p^*")
    q = complement(p)
    if not (p @ x @ q).is_zero():
        raise NotTriangular("p x (1-p) != 0")
    return q


def group_inverse_triangular(p: Matrix, x: Matrix) -> GenInverse:
    """Group inverse of x lower triangular relative to the projection p.

    With a = pxp, b = (1-p)xp and d = (1-p)x(1-p), x^# = a^# + z + d^# where
    ``z = (d^#)^2 b a^pi + d^pi b (a^#)^2 - d^# b a^#``.  Requires a^#, d^# and
    d^pi b a^pi = 0; the result is cross-checked against ``group_inverse(x)``.
    """
    q = _triangular_setup(p, x)
    a, b, d = p @ x @ p, q @ x @ p, q @ x @ q
    ga = _group(a)
    if ga is None:
        raise HypothesisFailed("pxp is group invertible")
    direct = _group(x)
    gd = _group(d)
    failure = None
    if gd is None:
        failure = "(1-p)x(1-p) is group invertible"
    else:
        n = x.rows
        a_pi = Matrix.identity(n) - a @ ga
        d_pi = Matrix.identity(n) - d @ gd
        if not (d_pi @ b @ a_pi).is_zero():
            failure = "d^pi b a^pi = 0"
    if failure is not None:
        if direct is not None:
            raise CertificateError(f"x is group invertible although {failure!r} fails")
        raise HypothesisFailed(failure)
    z = gd @ gd @ b @ a_pi + d_pi @ b @ ga @ ga - gd @ b @ ga
    xg = ga + z + gd
    if direct is None or xg != direct:
        raise CertificateError("triangular group inverse disagrees with the general routine")
    return _certify("group", x, xg, parts={"a#": ga, "d#": gd, "z": z})


def core_inverse_triangular(p: Matrix, a: Matrix) -> GenInverse:
    """Core inverse of a lower triangular relative to the projection p.

    Hypotheses: pap and ap^pi core invertible and (ap^pi)^pi p^pi a p = 0.
    Builds x from (pap)^core, (ap^pi)^core and the off-diagonal correction
    -(ap^pi)^core (p^pi a p)(pap)^core, then a^core = a^# a x.
    """
    q = _triangular_setup(p, a)
    pap, aq, qap = p @ a @ p, a @ q, q @ a @ p
    c_top = core_or_none(pap)
    if c_top is None:
        raise HypothesisFailed("pap is core invertible")
    c_bottom = core_or_none(aq)
    if c_bottom is None:
        raise HypothesisFailed("ap^pi is core invertible")
    aq_pi = Matrix.identity(a.rows) - aq @ _group(aq)
    if not (aq_pi @ qap).is_zero():
        raise HypothesisFailed("(ap^pi)^pi p^pi a p = 0")
    x = c_top - c_bottom @ qap @ c_top + c_bottom
    ag = group_inverse_triangular(p, a).inverse
    xc = ag @ a @ x
    result = _certify("core", a, xc, parts={"x": x, "a#": ag})
    if not (p @ xc @ q).is_zero():
        raise CertificateError("constructed core inverse has p a^core p^pi != 0")
    if xc != core_or_none(a):
        raise CertificateError("triangular core inverse disagrees with the general routine")
    return result


def core_inverse_ep_sum(a: Matrix, b: Matrix) -> GenInverse:
    """(a+b)^core for EP a and core invertible b with a b a^pi = 0.

    Also needs a(1 + a^# b) core invertible and b^pi a^pi b = 0.  The sum is
    lower triangular relative to the projection a a^#, so the triangular
    construction applies.
    """
    _require_square(a)
    if a.shape != b.shape:
        raise DimensionMismatch("a and b must have the same size")
    n = a.rows
    if not is_ep(a):
        raise HypothesisFailed("a is EP")
    if not is_core_invertible(b):
        raise HypothesisFailed("b is core invertible")
    ga = _group(a)
    a_pi = Matrix.identity(n) - a @ ga
    if not (a @ b @ a_pi).is_zero():
        raise HypothesisFailed("a b a^pi = 0")
    if not is_core_invertible(a + a @ ga @ b):
        raise HypothesisFailed("a(1+a^# b) is core invertible")
    if not (pi(b) @ a_pi @ b).is_zero():
        raise HypothesisFailed("b^pi a^pi b = 0")
    s = a + b
    try:
        result = core_inverse_triangular(a @ ga, s)
    except HypothesisFailed as exc:
        raise CertificateError(f"derived hypothesis failed for a+b: {exc.hypothesis}") from exc
    if not (a @ result.inverse @ a_pi).is_zero():
        raise CertificateError("a (a+b)^core a^pi != 0")
    return result
