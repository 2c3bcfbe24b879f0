import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from starcore.matrix import Matrix
from starcore.scalar import GaussianRational

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def fractions(bound=20):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


def gaussians(bound=20):
    return st.builds(GaussianRational, fractions(bound), fractions(bound))


@st.composite
def matrices(draw, rows=None, cols=None, max_dim=5, bound=6, square=False):
    m = rows if rows is not None else draw(st.integers(1, max_dim))
    if square:
        n = m
    else:
        n = cols if cols is not None else draw(st.integers(1, max_dim))
    # sparse-ish entries so that rank deficiency is common
    entry = st.one_of(st.just(0), st.just(0), gaussians(bound))
    return Matrix(draw(st.lists(st.lists(entry, min_size=n, max_size=n), min_size=m, max_size=m)))


def square_matrices(max_dim=5, bound=6):
    return matrices(max_dim=max_dim, bound=bound, square=True)


def to_sympy(a: Matrix):
    import sympy as sp

    return sp.Matrix(a.rows, a.cols, lambda i, j: sp.Rational(
        int(a[i, j].re.numerator), int(a[i, j].re.denominator)) + sp.I * sp.Rational(
        int(a[i, j].im.numerator), int(a[i, j].im.denominator)))


def from_sympy(m) -> Matrix:
    import sympy as sp

    def conv(z):
        re, im = sp.expand(z).as_real_imag()
        return GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))

    return Matrix([[conv(m[i, j]) for j in range(m.cols)] for i in range(m.rows)])


@pytest.fixture
def rng():
    return random.Random(20240601)


# the symbolic oracle is slow; tests that call it use this budget
oracle_settings = settings(max_examples=15)


def seeded(builder, max_dim=5):
    """Strategy drawing builder(Random(seed), n) for hypothesis-chosen seed and n."""
    return st.builds(lambda seed, n: builder(random.Random(seed), n),
                     st.integers(0, 2**32), st.integers(1, max_dim))


# acceptance reporting: one pass/fail line per @pytest.mark.criterion test ---------

_CRITERIA: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    details = [v for k, v in item.user_properties if k == "detail"]
    entry = _CRITERIA.setdefault(number, [title, True, []])
    entry[1] = entry[1] and report.passed
    entry[2].extend(details)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok, details = _CRITERIA[number]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if details:
            line += " (" + "; ".join(details) + ")"
        terminalreporter.write_line(line)


@pytest.fixture
def detail(request):
    """Attach a short measurement to the acceptance line of the running test."""
    def _add(text):
        request.node.user_properties.append(("detail", text))
    return _add
