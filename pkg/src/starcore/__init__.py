"""Exact generalized inverses over the Gaussian rationals."""

from .errors import (
    CertificateError,
    DimensionMismatch,
    DivisionByZero,
    GenerationExhausted,
    HypothesisFailed,
    NoGroupInverse,
    NotIdempotent,
    NotTriangular,
    StarcoreError,
)
from .geninv import (
    GenInverse,
    SpectralData,
    core_inverse,
    core_inverse_ep_sum,
    core_inverse_triangular,
    drazin_inverse,
    group_inverse,
    group_inverse_triangular,
    is_ep,
    moore_penrose,
    one_three_inverse,
    spectral_idempotent,
)
from .matrix import (
    FullRankFactorization,
    Matrix,
    PierceBlocks,
    full_rank_factorize,
    is_projection,
    pierce_decompose,
    rank,
    solve_right,
    star,
)
from .scalar import GaussianRational, parse

__version__ = "0.1.0"
