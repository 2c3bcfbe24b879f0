import pickle
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from starcore.errors import DivisionByZero, ScalarParseError
from starcore.scalar import ONE, ZERO, GaussianRational, add, conj, format_scalar, inv, mul, parse

from conftest import gaussians

G = GaussianRational


def test_halves_sum_to_one():
    assert add(G(Fraction(1, 2)), G(Fraction(1, 2))) == G(1, 0)


def test_conjugate_pair_sums_to_real():
    assert add(G(1, 2), G(1, -2)) == G(2)


def test_i_squared():
    assert mul(G(0, 1), G(0, 1)) == G(-1)


def test_conj_flips_imaginary_sign():
    assert conj(parse("3/4-2/5i")) == parse("3/4+2/5i")


def test_inverse_of_one_plus_i():
    # frozen from an independent symbolic computation: 1/(1+i) = 1/2 - i/2
    z = inv(G(1, 1))
    assert z == G(Fraction(1, 2), Fraction(-1, 2))
    assert mul(G(1, 1), z) == ONE


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        inv(ZERO)
    with pytest.raises(ZeroDivisionError):
        G(1) / ZERO


def test_reduced_storage():
    z = G(Fraction(6, 8), Fraction(-10, 4))
    assert (z.re.numerator, z.re.denominator) == (3, 4)
    assert (z.im.numerator, z.im.denominator) == (-5, 2)


@pytest.mark.parametrize("text, expected", [
    ("0", G(0)),
    ("-1/3", G(Fraction(-1, 3))),
    ("i", G(0, 1)),
    ("-i", G(0, -1)),
    ("2i", G(0, 2)),
    ("3/4-2/5i", G(Fraction(3, 4), Fraction(-2, 5))),
    ("1+i", G(1, 1)),
    ("-7/2+1/9i", G(Fraction(-7, 2), Fraction(1, 9))),
    ("4/2", G(2)),
])
def test_parse(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize("text", [
    "", " 1", "1 ", "1.5", "1/0", "+1", "--1", "i1", "1+", "1/2/3", "ii", "1e3", "١", "1\n", "j", "1+-i",
])
def test_parse_rejects(text):
    with pytest.raises(ScalarParseError):
        parse(text)


@pytest.mark.parametrize("z, text", [
    (G(0), "0"), (G(0, 1), "i"), (G(0, -1), "-i"), (G(1, 1), "1+i"),
    (G(Fraction(3, 4), Fraction(-2, 5)), "3/4-2/5i"), (G(0, 2), "2i"), (G(-5), "-5"),
])
def test_format_canonical(z, text):
    assert format_scalar(z) == text


def test_coerce_rejects_floats():
    with pytest.raises(TypeError):
        GaussianRational.coerce(0.5)
    with pytest.raises(TypeError):
        GaussianRational.coerce(1j)


@given(gaussians())
def test_round_trip(z):
    assert parse(format_scalar(z)) == z


@given(gaussians())
def test_pickle_round_trip(z):
    assert pickle.loads(pickle.dumps(z)) == z


@given(gaussians(), gaussians(), gaussians())
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x + ZERO == x and x * ONE == x
    assert x + (-x) == ZERO
    assert x - y == x + (-y)


@given(gaussians())
def test_multiplicative_inverse(z):
    if z:
        assert z * inv(z) == ONE
        assert z / z == ONE


@given(gaussians(), gaussians())
def test_involution_axioms(z, w):
    assert conj(conj(z)) == z
    assert conj(z + w) == conj(z) + conj(w)
    assert conj(z * w) == conj(w) * conj(z)
    assert (z * conj(z)).is_real


@given(gaussians(), gaussians())
def test_equal_values_hash_equal(z, w):
    if z == w:
        assert hash(z) == hash(w)
    assert hash(parse(format_scalar(z))) == hash(z)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_integer_embedding(a, b):
    assert G(a) + G(b) == G(a + b)
    assert G(a) * G(b) == G(a * b)
