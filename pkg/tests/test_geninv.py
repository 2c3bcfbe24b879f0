import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from starcore.errors import HypothesisFailed, NoGroupInverse, NotProjection, NotTriangular
from starcore.geninv import (
    annihilating_projection,
    core_inverse,
    core_inverse_ep_sum,
    core_inverse_triangular,
    core_invertible_by_projection,
    defining_equations,
    drazin_inverse,
    gram_witness,
    group_inverse,
    group_inverse_triangular,
    group_or_none,
    has_group_inverse,
    is_ep,
    moore_penrose,
    one_three_inverse,
    spectral_idempotent,
)
from starcore.lab.generators import rand_any_square, rand_ep, rand_index_one, rand_invertible
from starcore.matrix import Matrix, inverse, is_invertible, is_projection, rank

from conftest import from_sympy, matrices, oracle_settings, seeded, square_matrices, to_sympy

D = Matrix.diag
Z = Matrix.zeros
I2, I3 = Matrix.identity(2), Matrix.identity(3)
IDEMPOTENT = Matrix([[1, 1], [0, 0]])
NIL2 = Matrix([[0, 1], [0, 0]])


def jordan(n):
    return Matrix([[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)], shape=(n, n))


def anything_square():
    return st.one_of(square_matrices(), seeded(rand_any_square))


def index_one():
    return seeded(rand_index_one)


class TestGroup:
    @pytest.mark.parametrize("a, expected", [
        (I3, I3),
        (IDEMPOTENT, IDEMPOTENT),
        (D([2, 0]), D(["1/2", 0])),
    ])
    def test_examples(self, a, expected):
        g = group_inverse(a)
        assert g.inverse == expected
        assert g.kind == "group" and g.index == 1
        assert g.certificate == ("xa^2=a", "ax^2=x", "ax=xa")

    def test_nilpotent_has_none(self):
        with pytest.raises(NoGroupInverse, match=r"rank\(A\^2\) < rank\(A\)"):
            group_inverse(NIL2)

    @given(anything_square())
    def test_exists_iff_rank_stable(self, a):
        assert has_group_inverse(a) == (rank(a) == rank(a @ a))

    @oracle_settings
    @given(seeded(rand_index_one, max_dim=4))
    def test_agrees_with_symbolic_oracle(self, a):
        # index one: A^# = A (A^3)^+ A, evaluated with an independent pseudoinverse
        s = to_sympy(a)
        assert group_inverse(a).inverse == from_sympy(s * (s**3).pinv() * s)


class TestDrazin:
    def test_nilpotent(self):
        d = drazin_inverse(NIL2)
        assert d.inverse == Z(2) and d.index == 2

    def test_diagonal(self):
        d = drazin_inverse(D([2, 0]))
        assert d.inverse == D(["1/2", 0]) and d.index == 1

    def test_jordan_three(self):
        d = drazin_inverse(jordan(3))
        assert d.inverse == Z(3) and d.index == 3

    def test_invertible_reports_index_one(self):
        a = Matrix([[1, 2], [3, 4]])
        d = drazin_inverse(a)
        assert d.index == 1 and d.inverse == inverse(a)

    def test_complex_index_two(self):
        # frozen from A^k (A^(2k+1))^+ A^k computed symbolically, k = 2
        a = Matrix([[1, "i", 0], [0, 0, 1], [0, 0, 0]])
        d = drazin_inverse(a)
        assert d.index == 2
        assert d.inverse == Matrix([[1, "i", "i"], [0, 0, 0], [0, 0, 0]])
        assert d.certificate == ("xa^3=a^2", "ax^2=x", "ax=xa")

    @given(anything_square())
    def test_matches_pseudoinverse_formula(self, a):
        d = drazin_inverse(a)
        k = d.index
        ak = a ** k
        assert d.inverse == ak @ moore_penrose(a ** (2 * k + 1)).inverse @ ak

    @oracle_settings
    @given(seeded(rand_any_square, max_dim=4))
    def test_matches_symbolic_formula(self, a):
        s = to_sympy(a)
        k = next(j for j in range(1, a.rows + 2) if (s**j).rank() == (s**(j + 1)).rank())
        assert drazin_inverse(a).index == k
        assert drazin_inverse(a).inverse == from_sympy(s**k * (s**(2 * k + 1)).pinv() * s**k)

    @given(anything_square())
    def test_index_is_least_stable_power(self, a):
        k = drazin_inverse(a).index
        assert rank(a ** k) == rank(a ** (k + 1))
        assert k == 1 or rank(a ** (k - 1)) != rank(a ** k)


class TestMoorePenrose:
    def test_zero(self):
        assert moore_penrose(Z(2, 3)).inverse == Z(3, 2)

    def test_diagonal(self):
        assert moore_penrose(D([2, 0])).inverse == D(["1/2", 0])

    def test_idempotent(self):
        # frozen from an independent symbolic pseudoinverse
        x = moore_penrose(IDEMPOTENT)
        assert x.inverse == Matrix([["1/2", 0], ["1/2", 0]])
        assert x.certificate == ("axa=a", "xax=x", "(ax)^*=ax", "(xa)^*=xa")

    def test_complex_rank_one(self):
        assert moore_penrose(Matrix([[1, "i"], [0, 0]])).inverse == Matrix([["1/2", 0], ["-1/2i", 0]])

    @oracle_settings
    @given(matrices(max_dim=4, bound=4))
    def test_agrees_with_symbolic_pseudoinverse(self, a):
        assert moore_penrose(a).inverse == from_sympy(to_sympy(a).pinv())

    @given(matrices())
    def test_penrose_equations(self, a):
        x = moore_penrose(a).inverse
        assert all(ok for _, ok in defining_equations("moore-penrose", a, x))


class TestOneThree:
    @pytest.mark.parametrize("a, expected", [
        (I2, I2), (Z(2), Z(2)), (IDEMPOTENT, Matrix([["1/2", 0], ["1/2", 0]])),
    ])
    def test_examples(self, a, expected):
        x = one_three_inverse(a)
        assert x.inverse == expected
        assert x.kind == "one-three"
        assert x.certificate == ("axa=a", "(ax)^*=ax")


class TestCore:
    @pytest.mark.parametrize("a, expected", [
        (I2, I2),
        (IDEMPOTENT, Matrix([[1, 0], [0, 0]])),
        (D([2, 0]), D(["1/2", 0])),
        (Matrix([[1, "i"], [0, 0]]), Matrix([[1, 0], [0, 0]])),
    ])
    def test_examples(self, a, expected):
        x = core_inverse(a)
        assert x.inverse == expected
        assert x.certificate == ("xa^2=a", "ax^2=x", "(ax)^*=ax", "axa=a", "xax=x")

    def test_nilpotent_has_none(self):
        with pytest.raises(NoGroupInverse):
            core_inverse(NIL2)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_jordan_blocks_rejected(self, n):
        with pytest.raises(NoGroupInverse):
            core_inverse(jordan(n))

    @oracle_settings
    @given(seeded(rand_index_one, max_dim=4))
    def test_unique_against_symbolic_route(self, a):
        # A^# A A^+ with both factors from an independent symbolic system
        s = to_sympy(a)
        g = s * (s**3).pinv() * s
        assert core_inverse(a).inverse == from_sympy(g * s * s.pinv())

    @given(index_one())
    def test_any_solution_of_defining_equations_is_it(self, a):
        # solving x a^2 = a, a x^2 = x, (ax)^* = ax in closed form: x = a^# P where
        # P is the orthogonal projection onto the range of a
        x = core_inverse(a).inverse
        p = a @ moore_penrose(a).inverse
        assert x == group_inverse(a).inverse @ p
        assert x @ a @ a == a and a @ x @ x == x and (a @ x).star() == a @ x


class TestCoreCharacterizations:
    @given(anything_square())
    def test_projection_route(self, a):
        p = annihilating_projection(a)
        assert is_projection(p)
        assert (p @ a).is_zero()
        assert is_invertible(a + p) == has_group_inverse(a)
        assert core_invertible_by_projection(a) == has_group_inverse(a)

    @given(index_one())
    def test_gram_witness(self, a):
        s = gram_witness(a)
        assert s is not None and s @ a.star() @ a == a

    @given(matrices())
    def test_gram_witness_always_exists(self, a):
        # over this field A lies in the left ideal of A^* A for every A
        s = gram_witness(a)
        assert s is not None and s @ a.star() @ a == a


class TestSpectral:
    def test_invertible(self):
        assert spectral_idempotent(Matrix([[1, 2], [3, 4]])).a_pi == Z(2)

    def test_nilpotent(self):
        assert spectral_idempotent(jordan(3)).a_pi == I3

    def test_diagonal(self):
        assert spectral_idempotent(D([2, 0])).a_pi == D([0, 1])

    @given(anything_square())
    def test_invariants(self, a):
        s = spectral_idempotent(a)
        n = a.rows
        assert s.a_pi == Matrix.identity(n) - s.aad
        assert s.a_pi @ s.a_pi == s.a_pi
        assert s.a_pi @ a == a @ s.a_pi


class TestEP:
    def test_examples(self):
        assert is_ep(D([1, 0]))
        assert not is_ep(IDEMPOTENT)
        assert is_ep(Matrix([[1, 2], [3, 4]]))
        assert not is_ep(NIL2)

    @given(anything_square())
    def test_star_symmetry(self, a):
        assert is_ep(a) == is_ep(a.star())

    @given(seeded(rand_invertible))
    def test_invertible_is_ep(self, a):
        assert is_ep(a)

    @given(st.builds(lambda seed, n, k: rand_ep(random.Random(seed), n, min(k, n)),
                     st.integers(0, 2**32), st.integers(1, 5), st.integers(0, 5)))
    def test_ep_core_equals_group(self, a):
        assert is_ep(a)
        assert core_inverse(a).inverse == group_inverse(a).inverse
        assert group_inverse(a).inverse == moore_penrose(a).inverse


# triangular constructions ----------------------------------------------------

class TestGroupTriangular:
    def test_diagonal(self):
        g = group_inverse_triangular(D([1, 0]), D([2, 3]))
        assert g.inverse == D(["1/2", "1/3"])
        assert g.parts["z"] == Z(2)

    def test_lower_unipotent(self):
        # oracle: the inverse of an invertible x is its group inverse
        x = Matrix([[1, 0], [1, 1]])
        g = group_inverse_triangular(D([1, 0]), x)
        assert g.inverse == Matrix([[1, 0], [-1, 1]]) == group_inverse(x).inverse
        assert g.parts["z"] == Matrix([[0, 0], [-1, 0]])

    @given(index_one())
    def test_identity_projection(self, x):
        n = x.rows
        assert group_inverse_triangular(Matrix.identity(n), x).inverse == group_inverse(x).inverse

    def test_bottom_corner_not_group_invertible(self):
        p = D([1, 0, 0])
        x = Matrix([[1, 0, 0], [0, 0, 1], [0, 0, 0]])
        with pytest.raises(HypothesisFailed) as err:
            group_inverse_triangular(p, x)
        assert err.value.hypothesis == "(1-p)x(1-p) is group invertible"

    def test_coupling_condition(self):
        p = D([1, 0])
        x = Matrix([[0, 0], [1, 0]])
        with pytest.raises(HypothesisFailed) as err:
            group_inverse_triangular(p, x)
        assert err.value.hypothesis == "d^pi b a^pi = 0"

    def test_not_triangular(self):
        with pytest.raises(NotTriangular):
            group_inverse_triangular(D([1, 0]), Matrix([[1, 1], [0, 1]]))

    def test_needs_projection(self):
        with pytest.raises(NotProjection):
            group_inverse_triangular(IDEMPOTENT, I2)


class TestCoreTriangular:
    def test_diagonal(self):
        assert core_inverse_triangular(D([1, 0]), D([2, 3])).inverse == D(["1/2", "1/3"])

    def test_lower_unipotent(self):
        a = Matrix([[1, 0], [1, 1]])
        c = core_inverse_triangular(D([1, 0]), a)
        assert c.inverse == core_inverse(a).inverse == Matrix([[1, 0], [-1, 1]])

    @given(index_one())
    def test_identity_projection(self, a):
        n = a.rows
        assert core_inverse_triangular(Matrix.identity(n), a).inverse == core_inverse(a).inverse

    def test_top_corner_fails(self):
        p = D([1, 1, 0])
        a = Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 1]])
        with pytest.raises(HypothesisFailed) as err:
            core_inverse_triangular(p, a)
        assert err.value.hypothesis == "pap is core invertible"

    def test_coupling_fails(self):
        p = D([1, 0])
        a = Matrix([[1, 0], [1, 0]])
        with pytest.raises(HypothesisFailed) as err:
            core_inverse_triangular(p, a)
        assert err.value.hypothesis == "(ap^pi)^pi p^pi a p = 0"


class TestEpSum:
    def test_orthogonal_idempotents(self):
        assert core_inverse_ep_sum(D([1, 0]), D([0, 1])).inverse == I2

    def test_identity_pair(self):
        assert core_inverse_ep_sum(I2, I2).inverse == Matrix.scalar("1/2", 2)

    def test_diagonal_triple(self):
        # oracle: core inverse of the diagonal sum diag(1, 2, 0)
        r = core_inverse_ep_sum(D([1, 0, 0]), D([0, 2, 0]))
        assert r.inverse == D([1, "1/2", 0]) == core_inverse(D([1, 2, 0])).inverse

    @pytest.mark.parametrize("a, b, failed", [
        (NIL2, I2, "a is EP"),
        (D([1, 0]), NIL2, "b is core invertible"),
        (D([1, 0]), Matrix([[0, 1], [0, 1]]), "a b a^pi = 0"),
        (D([1, 1, 0]), Matrix([[-1, 1, 0], [0, -1, 0], [0, 0, 1]]), "a(1+a^# b) is core invertible"),
    ])
    def test_first_failing_hypothesis(self, a, b, failed):
        with pytest.raises(HypothesisFailed) as err:
            core_inverse_ep_sum(a, b)
        assert err.value.hypothesis == failed


@given(st.integers(0, 2**32), st.integers(2, 5))
def test_corner_group_idempotent_identity(seed, n):
    """(a p^pi)(a p^pi)^# = (a a^#) p^pi for lower triangular a."""
    rng = random.Random(seed)
    k = rng.randint(0, n)
    p = D([1] * k + [0] * (n - k))
    q = Matrix.identity(n) - p
    a = rand_index_one(rng, n)
    a = a - p @ a @ q  # kill the upper corner
    if group_or_none(a) is None or group_or_none(a @ q) is None:
        return
    aq = a @ q
    assert aq @ group_inverse(aq).inverse == a @ group_inverse(a).inverse @ q
