"""Dense exact matrices over the Gaussian rationals.

A matrix keeps its real and imaginary parts as two numpy object arrays of
``gmpy2.mpq``.  numpy only supplies the loops; every entry is an exact
rational, and there is no tolerance parameter anywhere in this module.
The involution of the matrix ring is the conjugate transpose, ``star``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from gmpy2 import mpq

from .errors import DimensionMismatch, MatrixFormatError, NotIdempotent, SingularMatrix
from .scalar import GaussianRational, format_scalar, parse

_Q0 = mpq(0)
_Q1 = mpq(1)


def _zeros(m: int, n: int) -> np.ndarray:
    a = np.empty((m, n), dtype=object)
    a.fill(_Q0)
    return a


def _dot(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if x.shape[1] == 0:
        return _zeros(x.shape[0], y.shape[1])
    return x.dot(y)


def _has_nonzero(a: np.ndarray) -> bool:
    return any(v != 0 for v in a.flat)


class Matrix:
    """Immutable m x n matrix of Gaussian rationals.

    Build one from nested rows of anything ``GaussianRational.coerce``
    accepts (ints, Fractions, scalar strings such as ``"1/2-i"``)::

        Matrix([[1, "i"], [0, "2/3"]])
    """

    __slots__ = ("_re", "_im", "_real", "_hash")

    def __init__(self, rows: Iterable[Iterable] = (), *, shape: tuple[int, int] | None = None):
        data = [[GaussianRational.coerce(v) for v in row] for row in rows]
        if shape is None:
            m = len(data)
            n = len(data[0]) if m else 0
        else:
            m, n = shape
            if len(data) != m:
                raise DimensionMismatch(f"expected {m} rows, got {len(data)}")
        if any(len(row) != n for row in data):
            raise DimensionMismatch("ragged rows")
        re = _zeros(m, n)
        im = _zeros(m, n)
        for i, row in enumerate(data):
            for j, z in enumerate(row):
                re[i, j] = z.re
                im[i, j] = z.im
        self._init(re, im)

    def _init(self, re: np.ndarray, im: np.ndarray, real: bool | None = None) -> None:
        re.flags.writeable = False
        im.flags.writeable = False
        self._re = re
        self._im = im
        self._real = (not _has_nonzero(im)) if real is None else real
        self._hash = None

    @classmethod
    def _raw(cls, re: np.ndarray, im: np.ndarray | None = None, real: bool | None = None) -> "Matrix":
        self = cls.__new__(cls)
        if im is None:
            im = _zeros(*re.shape)
            real = True
        self._init(re, im, real)
        return self

    # constructors --------------------------------------------------------
    @classmethod
    def zeros(cls, m: int, n: int | None = None) -> "Matrix":
        return cls._raw(_zeros(m, m if n is None else n))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        re = _zeros(n, n)
        for k in range(n):
            re[k, k] = _Q1
        return cls._raw(re)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        rows = [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls(rows, shape=(n, n))

    @classmethod
    def scalar(cls, z, n: int) -> "Matrix":
        return cls.identity(n) * GaussianRational.coerce(z)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a matrix from a 2-D grid of conformable blocks."""
        re = np.block([[b._re for b in row] for row in blocks])
        im = np.block([[b._im for b in row] for row in blocks])
        return cls._raw(np.array(re, dtype=object), np.array(im, dtype=object),
                        all(b._real for row in blocks for b in row))

    # shape and access ----------------------------------------------------
    @property
    def rows(self) -> int:
        return self._re.shape[0]

    @property
    def cols(self) -> int:
        return self._re.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._re.shape

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_real(self) -> bool:
        return self._real

    def __getitem__(self, idx: tuple[int, int]) -> GaussianRational:
        i, j = idx
        return GaussianRational(self._re[i, j], self._im[i, j])

    @property
    def entries(self) -> tuple[GaussianRational, ...]:
        """Row-major entries."""
        return tuple(GaussianRational(r, i) for r, i in zip(self._re.flat, self._im.flat))

    def tolist(self) -> list[list[GaussianRational]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def submatrix(self, rows, cols) -> "Matrix":
        """Select rows and columns by index list or slice."""
        re = self._re[rows][:, cols]
        im = self._im[rows][:, cols]
        return Matrix._raw(np.array(re, dtype=object), np.array(im, dtype=object),
                           True if self._real else None)

    def is_zero(self) -> bool:
        return not _has_nonzero(self._re) and (self._real or not _has_nonzero(self._im))

    # arithmetic ----------------------------------------------------------
    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        if self._real and other._real:
            return Matrix._raw(self._re + other._re)
        return Matrix._raw(self._re + other._re, self._im + other._im)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        if self._real and other._real:
            return Matrix._raw(self._re - other._re)
        return Matrix._raw(self._re - other._re, self._im - other._im)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(-self._re, -self._im, self._real)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ar, ai, br, bi = self._re, self._im, other._re, other._im
        if self._real and other._real:
            return Matrix._raw(_dot(ar, br))
        if self._real:
            return Matrix._raw(_dot(ar, br), _dot(ar, bi))
        if other._real:
            return Matrix._raw(_dot(ar, br), _dot(ai, br))
        return Matrix._raw(_dot(ar, br) - _dot(ai, bi), _dot(ar, bi) + _dot(ai, br))

    def __mul__(self, z) -> "Matrix":
        if isinstance(z, Matrix):
            return NotImplemented
        z = GaussianRational.coerce(z)
        if z.im == 0:
            return Matrix._raw(self._re * z.re, self._im * z.re, self._real)
        return Matrix._raw(self._re * z.re - self._im * z.im, self._re * z.im + self._im * z.re)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative powers are not defined; use inverse()")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def star(self) -> "Matrix":
        """Conjugate transpose."""
        return Matrix._raw(np.array(self._re.T, dtype=object), np.array(-self._im.T, dtype=object),
                           self._real)

    @property
    def H(self) -> "Matrix":
        return self.star()

    def transpose(self) -> "Matrix":
        return Matrix._raw(np.array(self._re.T, dtype=object), np.array(self._im.T, dtype=object),
                           self._real)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def conj(self) -> "Matrix":
        return Matrix._raw(self._re.copy(), -self._im, self._real)

    # comparison ----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        if self._real != other._real:
            return False
        return bool(np.array_equal(self._re, other._re)) and bool(np.array_equal(self._im, other._im))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, tuple(self._re.flat), tuple(self._im.flat)))
        return self._hash

    def __reduce__(self):
        return (Matrix.from_json_obj, (self.to_json_obj(),))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(z) for z in row) for row in self.tolist())
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    # serialization -------------------------------------------------------
    def to_json_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_scalar(z) for z in row] for row in self.tolist()],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "Matrix":
        if not isinstance(obj, dict) or set(obj) != {"rows", "cols", "entries"}:
            raise MatrixFormatError("matrix JSON must have exactly the keys rows, cols, entries")
        m, n, entries = obj["rows"], obj["cols"], obj["entries"]
        if not (type(m) is int and type(n) is int and m >= 0 and n >= 0):
            raise MatrixFormatError("rows and cols must be non-negative integers")
        if not isinstance(entries, list) or len(entries) != m:
            raise MatrixFormatError(f"entries must be a list of {m} rows")
        rows = []
        for row in entries:
            if not isinstance(row, list) or len(row) != n:
                raise MatrixFormatError(f"each row must be a list of {n} scalar strings")
            if not all(isinstance(v, str) for v in row):
                raise MatrixFormatError("matrix entries must be scalar strings")
            try:
                rows.append([parse(v) for v in row])
            except ValueError as exc:
                raise MatrixFormatError(str(exc)) from exc
        return cls(rows, shape=(m, n))

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def loads(cls, text: str) -> "Matrix":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"invalid JSON: {exc}") from exc
        return cls.from_json_obj(obj)


def load_matrix(path) -> Matrix:
    with open(path, encoding="utf-8") as fh:
        return Matrix.loads(fh.read())


def save_matrix(a: Matrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(a.dumps())
        fh.write("\n")


def star(a: Matrix) -> Matrix:
    return a.star()


# row reduction ------------------------------------------------------------

def _reduce(re: np.ndarray, im: np.ndarray, real: bool, full: bool) -> list[int]:
    """In-place Gauss(-Jordan) elimination; returns pivot columns.

    The first nonzero entry at or below the current row is the pivot.  With
    ``full`` the result is the reduced row echelon form, otherwise only the
    entries below each pivot are cleared.
    """
    m, n = re.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        k = next((k for k in range(r, m) if re[k, c] != 0 or im[k, c] != 0), None)
        if k is None:
            continue
        if k != r:
            re[[r, k]] = re[[k, r]]
            im[[r, k]] = im[[k, r]]
        pr, pi = re[r, c], im[r, c]
        if pi == 0:
            if pr != 1:
                re[r, c:] = re[r, c:] / pr
                if not real:
                    im[r, c:] = im[r, c:] / pr
        else:
            nrm = pr * pr + pi * pi
            ir, ii = pr / nrm, -pi / nrm
            rr, ri = re[r, c:].copy(), im[r, c:].copy()
            re[r, c:] = rr * ir - ri * ii
            im[r, c:] = rr * ii + ri * ir
        lo = 0 if full else r + 1
        targets = [t for t in range(lo, m) if t != r and (re[t, c] != 0 or im[t, c] != 0)]
        if targets:
            fr = re[targets, c].reshape(-1, 1)
            pr_row = re[r, c:].reshape(1, -1)
            if real:
                re[targets, c:] = re[targets, c:] - fr * pr_row
            else:
                fi = im[targets, c].reshape(-1, 1)
                pi_row = im[r, c:].reshape(1, -1)
                re[targets, c:] = re[targets, c:] - (fr * pr_row - fi * pi_row)
                im[targets, c:] = im[targets, c:] - (fr * pi_row + fi * pr_row)
        pivots.append(c)
        r += 1
    return pivots


def rref(a: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns."""
    re, im = a._re.copy(), a._im.copy()
    pivots = _reduce(re, im, a._real, full=True)
    return Matrix._raw(re, im, True if a._real else None), tuple(pivots)


def rank(a: Matrix) -> int:
    re, im = a._re.copy(), a._im.copy()
    return len(_reduce(re, im, a._real, full=False))


def inverse(a: Matrix) -> Matrix:
    """Exact inverse of a square matrix; raises SingularMatrix."""
    if not a.is_square:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = a.rows
    aug = Matrix.block([[a, Matrix.identity(n)]])
    re, im = aug._re.copy(), aug._im.copy()
    pivots = _reduce(re, im, aug._real, full=True)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return Matrix._raw(np.array(re[:, n:], dtype=object), np.array(im[:, n:], dtype=object),
                       True if aug._real else None)


def is_invertible(a: Matrix) -> bool:
    return a.is_square and rank(a) == a.rows


# factorizations and structure ----------------------------------------------

@dataclass(frozen=True)
class FullRankFactorization:
    """``A = F @ G`` with F of full column rank r and G of full row rank r."""

    F: Matrix
    G: Matrix
    r: int


def full_rank_factorize(a: Matrix) -> FullRankFactorization:
    """F = pivot columns of A, G = nonzero rows of rref(A).

    The zero matrix factors as an m x 0 times 0 x n product (r = 0).
    """
    r_form, pivots = rref(a)
    r = len(pivots)
    f = a.submatrix(slice(None), list(pivots))
    g = r_form.submatrix(slice(0, r), slice(None))
    return FullRankFactorization(f, g, r)


@dataclass(frozen=True)
class PierceBlocks:
    """Corners of x relative to an idempotent p, each stored full-size."""

    p: Matrix
    pxp: Matrix
    px_q: Matrix
    qxp: Matrix
    qxq: Matrix

    def total(self) -> Matrix:
        return self.pxp + self.px_q + self.qxp + self.qxq

    def as_grid(self) -> tuple[tuple[Matrix, Matrix], tuple[Matrix, Matrix]]:
        return (self.pxp, self.px_q), (self.qxp, self.qxq)


def complement(p: Matrix) -> Matrix:
    """1 - p."""
    return Matrix.identity(p.rows) - p


def is_idempotent(p: Matrix) -> bool:
    return p.is_square and p @ p == p


def is_projection(p: Matrix) -> bool:
    """True iff p^2 = p = p^*."""
    return p.is_square and p.star() == p and p @ p == p


def pierce_decompose(x: Matrix, p: Matrix) -> PierceBlocks:
    if not (x.is_square and p.shape == x.shape):
        raise DimensionMismatch("x and p must be square of the same size")
    if not is_idempotent(p):
        raise NotIdempotent("p^2 != p")
    q = complement(p)
    xp, xq = x @ p, x @ q
    return PierceBlocks(p, p @ xp, p @ xq, q @ xp, q @ xq)


def solve_right(a: Matrix, b: Matrix) -> Matrix | None:
    """Some X with X @ a == b, or None when no such X exists."""
    if a.cols != b.cols:
        raise DimensionMismatch(f"X @ A = B needs A and B with equal column counts, got {a.shape}, {b.shape}")
    k = a.rows
    aug = Matrix.block([[a.transpose(), b.transpose()]])
    re, im = aug._re.copy(), aug._im.copy()
    pivots = _reduce(re, im, aug._real, full=True)
    if any(c >= k for c in pivots):
        return None
    y_re = _zeros(k, b.rows)
    y_im = _zeros(k, b.rows)
    for row, c in enumerate(pivots):
        y_re[c] = re[row, k:]
        y_im[c] = im[row, k:]
    return Matrix._raw(y_re, y_im).transpose()
