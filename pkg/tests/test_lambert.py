import cmath
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from lamw.lambert import (
    BRANCH_POINT,
    ConvergenceError,
    SingularIntegrandError,
    is_principal,
    nb_check,
    nb_rhs,
    omega,
    series_coefficient,
    series_integral_consistency,
    w0_halley,
    w0_integral,
    w0_series,
)
from lamw.lambert import _series_ratio
from lamw.special import DomainError, ToleranceConfig, log_gamma

INV_E = math.exp(-1)


def bisect_root(f, a, b):
    """Plain bisection; independent of every solver in the package."""
    fa = f(a)
    for _ in range(200):
        m = 0.5 * (a + b)
        if m in (a, b):
            break
        fm = f(m)
        if (fa < 0) == (fm < 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)



# ---- oracle -----------------------------------------------------------------


def test_halley_trivial_points():
    assert w0_halley(math.e) == 1.0
    assert w0_halley(0.0) == 0.0


def test_halley_residual_at_ten():
    w = w0_halley(10.0)
    assert abs(w * math.exp(w) - 10.0) <= 1e-14


def test_halley_matches_bisection():
    for x in (0.1, -0.2, 1.0, 3.0, 50.0):
        ref = bisect_root(lambda w: w * math.exp(w) - x, -1.0, 5.0)
        assert w0_halley(x) == pytest.approx(ref, rel=1e-15, abs=1e-16)


@pytest.mark.parametrize(
    "x", [0.5 + 2j, -2 + 0.01j, -2 - 0.01j, -1 + 0j, 3 + 1j, -0.36 + 1e-3j, 1e4 - 1e4j, -5j]
)
def test_halley_complex_principal(x):
    w = w0_halley(x)
    ref = complex(mpmath.lambertw(x))
    assert abs(w - ref) <= 1e-14 * max(1.0, abs(ref))
    assert is_principal(w)


def test_halley_real_domain():
    with pytest.raises(DomainError):
        w0_halley(-0.5)
    assert w0_halley(BRANCH_POINT) == -1.0


def test_halley_gives_up():
    with pytest.raises(ConvergenceError):
        w0_halley(1e6, ToleranceConfig(max_iterations=1))


def test_is_principal():
    assert is_principal(0.0)
    assert is_principal(-1.0)
    assert not is_principal(-1.5)
    assert not is_principal(complex(-0.3, 4.0))
    assert not is_principal(complex(-2.0, 1.0))


# ---- integral representation --------------------------------------------------


def test_integral_at_zero():
    assert w0_integral(0.0) == 0.0


def test_integral_at_e():
    assert w0_integral(math.e) == pytest.approx(1.0, abs=1e-13)


def test_integral_at_one_vs_oracle():
    oracle = w0_halley(1.0)
    assert abs(oracle * math.exp(oracle) - 1) <= 1e-15
    assert abs(w0_integral(1.0) - oracle) <= 1e-11


def test_integral_real_in_real_out():
    w = w0_integral(2.0)
    assert isinstance(w, float)
    wc = w0_integral(2 + 0j)
    assert isinstance(wc, complex) and wc.imag == 0.0


@pytest.mark.parametrize("x", [-0.4, -1.0, -10.0, -1 + 0j, -3 - 0j, complex(-2, 1e-14)])
def test_integral_singular_on_cut(x):
    with pytest.raises(SingularIntegrandError):
        w0_integral(x)


def test_singular_message_names_the_ray():
    with pytest.raises(SingularIntegrandError, match="x < -1/e"):
        w0_integral(-1.0)


@pytest.mark.parametrize("x", [math.nan, math.inf, complex(0, math.inf)])
def test_integral_rejects_non_finite(x):
    with pytest.raises(DomainError):
        w0_integral(x)


def test_integral_nonconvergence_raises():
    with pytest.raises(ConvergenceError):
        w0_integral(100.0, ToleranceConfig(abs_tol=1e-16, rel_tol=1e-16, max_subdivisions=2))


RANDOM_REAL = np.random.default_rng(20240601).uniform(-INV_E + 0.01, 10.0, 20)


@pytest.mark.parametrize(
    "x", [0.01, 0.1, 0.5, 1.0, 2.0, math.e, 5.0, 10.0, 100.0] + RANDOM_REAL.tolist()
)
def test_round_trip(x):
    w = w0_integral(x)
    assert abs(w * math.exp(w) - x) <= 1e-9 * max(1.0, abs(x))


def _random_disc(n, radius, seed):
    rng = np.random.default_rng(seed)
    r = radius * np.sqrt(rng.uniform(0, 1, n))
    th = rng.uniform(0, 2 * math.pi, n)
    return [complex(a, b) for a, b in zip(r * np.cos(th), r * np.sin(th))]


@pytest.mark.parametrize("x", [0.05, -0.05, 0.15, -0.15, 0.3, -0.3] + _random_disc(20, 0.3, 7))
def test_integral_vs_series(x):
    assert abs(w0_integral(x) - w0_series(x)) <= 1e-10


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, math.e, 10.0, 100.0])
def test_integral_vs_oracle_beyond_radius(x):
    assert abs(w0_integral(x) - w0_halley(x)) <= 1e-10


@pytest.mark.parametrize(
    "x", [0.5 + 2j, 1 + 1j, -2 + 0.5j, -0.3 + 0.01j, 10 - 3j, -5 + 5j, 0.2j, -1 + 1e-6j]
)
def test_conjugate_symmetry(x):
    w = w0_integral(x)
    wc = w0_integral(x.conjugate())
    assert abs(wc - w.conjugate()) <= 1e-11


@pytest.mark.parametrize("x", [0.5 + 2j, -2 + 0.5j, 10 - 3j, -5 + 5j, -1 + 1e-6j, 50j])
def test_integral_vs_oracle_complex(x):
    assert abs(w0_integral(x) - w0_halley(x)) <= 1e-10 * max(1.0, abs(x))


def test_monotone_on_real_line():
    xs = np.concatenate([np.linspace(-0.35, 1.0, 60), np.geomspace(1.01, 100, 60)])
    ws = [w0_integral(float(x)) for x in xs]
    assert all(b > a for a, b in zip(ws, ws[1:]))


def test_near_branch_point():
    x = BRANCH_POINT + 1e-6
    assert abs(w0_integral(x) - w0_halley(x)) <= 1e-8


# ---- omega ------------------------------------------------------------------------


def test_omega_value():
    ref = bisect_root(lambda w: w * math.exp(w) - 1.0, 0.5, 0.6)
    polished = w0_halley(1.0)
    assert abs(polished - ref) <= 2.3e-16  # one ulp
    assert abs(omega() - 0.5671432904097838) <= 1e-11
    assert abs(omega() - polished) <= 1e-11


def test_omega_defining_equations():
    w = omega()
    assert abs(w * math.exp(w) - 1) <= 1e-11
    assert abs(w + math.log(w)) <= 1e-11


def test_omega_is_integral_at_one():
    assert omega() == w0_integral(1.0)


# ---- series --------------------------------------------------------------------


def test_series_zero():
    assert w0_series(0.0) == 0.0


def test_series_values():
    assert w0_series(0.1) == pytest.approx(0.09127652716086226, abs=1e-16)
    assert abs(w0_series(0.1) - w0_halley(0.1)) <= 1e-13
    w = w0_series(-0.2)
    assert w == pytest.approx(-0.2591711018190738, abs=2e-16)
    assert abs(w - w0_halley(-0.2)) <= 1e-13
    assert abs(w * math.exp(w) + 0.2) <= 1e-15


@pytest.mark.parametrize("x", [INV_E, -INV_E, 1.0, 0.4j])
def test_series_domain(x):
    with pytest.raises(DomainError):
        w0_series(x)


def test_series_fixed_terms():
    assert w0_series(0.2, terms=1) == 0.2
    assert w0_series(0.2, terms=2) == pytest.approx(0.2 - 0.04, abs=1e-17)
    with pytest.raises(DomainError):
        w0_series(0.1, terms=0)


def test_series_coefficients_exact():
    assert [series_coefficient(n) for n in range(1, 6)] == [
        Fraction(1),
        Fraction(-1),
        Fraction(3, 2),
        Fraction(-8, 3),
        Fraction(125, 24),
    ]


def test_series_recurrence_reproduces_coefficients():
    c = 1.0
    for n in range(1, 40):
        assert c == pytest.approx(float(series_coefficient(n)), rel=1e-13)
        c *= _series_ratio(n)


# ---- Nuttall-Bouwkamp --------------------------------------------------------------


def test_nb_rhs_values():
    assert nb_rhs(1.0) == pytest.approx(math.pi, rel=1e-15)
    assert nb_rhs(0.0) == math.pi
    assert nb_rhs(2.0) == pytest.approx(6.283185307179586, rel=1e-15)


@pytest.mark.parametrize("nu", [-1.0, math.nan, math.inf])
def test_nb_domain(nu):
    with pytest.raises(DomainError):
        nb_rhs(nu)
    with pytest.raises(DomainError):
        nb_check(nu)


def test_nb_check_examples():
    r1 = nb_check(1.0)
    assert r1.rhs == pytest.approx(math.pi, rel=1e-15)
    assert r1.rel_error <= 1e-11
    r0 = nb_check(0.0)
    assert r0.rel_error <= 1e-13
    r = nb_check(3.7)
    assert r.rhs == math.exp(math.log(math.pi) + 3.7 * math.log(3.7) - log_gamma(4.7))
    assert abs(log_gamma(4.7) - log_gamma(3.7) - math.log(3.7)) <= 1e-12
    assert r.rel_error <= 1e-10


@pytest.mark.parametrize("nu", [0, 0.25, 0.5, 1, 1.5, 2, 3, 3.7, 5, 10, 20])
def test_nb_sweep(nu):
    r = nb_check(nu)
    assert r.rel_error == abs(r.lhs - r.rhs) / max(abs(r.rhs), 1e-300)
    assert r.rel_error <= 1e-10


def test_nb_rhs_vs_mpmath():
    for nu in (0.25, 3.7, 12.5, 20.0):
        ref = float(mpmath.pi * mpmath.mpf(nu) ** nu / mpmath.gamma(1 + nu))
        assert nb_rhs(nu) == pytest.approx(ref, rel=1e-13)


def test_consistency_examples():
    assert series_integral_consistency(0.2, 10) <= 1e-12
    assert series_integral_consistency(0.0, 5) == 0.0
    assert series_integral_consistency(-0.3, 15) <= 1e-11


@pytest.mark.parametrize("x,n", [(0.31, 5), (0.1, 0), (0.1, 31)])
def test_consistency_domain(x, n):
    with pytest.raises(DomainError):
        series_integral_consistency(x, n)
