"""Principal branch W0 of the Lambert W function.

Three independent routes to ``W0(x)``:

* :func:`w0_integral` -- ``(1/pi) * int_0^pi log(1 + x g(t)) dt`` with the
  Nuttall-Bouwkamp kernel ``g``;
* :func:`w0_series` -- the Taylor series at the origin, ``|x| < 1/e``;
* :func:`w0_halley` -- Halley iteration on ``w e^w = x``, used as the oracle.

plus the Nuttall-Bouwkamp identity itself (:func:`nb_rhs`, :func:`nb_check`)
and the term-by-term link between it and the series.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .quadrature import integrate
from .special import DomainError, ToleranceConfig, _log_g, EXP_UNDERFLOW, kernel_power, log_gamma

__all__ = [
    "BRANCH_POINT",
    "ConvergenceError",
    "NBCheckRecord",
    "SingularIntegrandError",
    "is_principal",
    "nb_check",
    "nb_lhs",
    "nb_rhs",
    "omega",
    "series_coefficient",
    "series_integral_consistency",
    "w0_halley",
    "w0_integral",
    "w0_series",
]

Number = Union[float, complex]

INV_E = math.exp(-1.0)
BRANCH_POINT = -INV_E
SERIES_MAX_TERMS = 200
SERIES_REL_CUTOFF = 1e-16
# |1 + x g| below this switches log to a series in x g
LOG1P_SWITCH = 1e-4
# 1 + x g with negative real part and |imag| at most this is on the log's cut
CUT_IMAG_TOL = 1e-12

_EPS = 2.220446049250313e-16


class ConvergenceError(ArithmeticError):
    """An integral or an iteration did not reach its tolerance."""


class SingularIntegrandError(DomainError):
    """``1 + x g(t)`` vanishes or lies on the negative real axis for some t."""


def _as_number(x) -> Number:
    if isinstance(x, complex):
        if not (math.isfinite(x.real) and math.isfinite(x.imag)):
            raise DomainError(f"x must be finite, got {x!r}")
        return x
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    return x


def _clog1p(z: complex) -> complex:
    if abs(z) < LOG1P_SWITCH:
        # error ~ |z|^5 / 5, far below double precision here
        return z * (1.0 - z * (0.5 - z * (1.0 / 3.0 - z * 0.25)))
    return cmath.log(1.0 + z)


def _integrand(x: Number):
    """``t -> log(1 + x g(t))`` with the singularity check built in."""
    if isinstance(x, complex):
        def h(t):
            lg = _log_g(t)
            if lg < EXP_UNDERFLOW:
                return 0j
            xg = x * math.exp(lg)
            w = 1.0 + xg
            if w.real <= 0.0 and abs(w.imag) <= CUT_IMAG_TOL:
                raise SingularIntegrandError(
                    f"1 + x g(t) = {w!r} at t = {t!r} lies on the cut of log for x = {x!r}"
                )
            return _clog1p(xg)
    else:
        def h(t):
            lg = _log_g(t)
            if lg < EXP_UNDERFLOW:
                return 0.0
            xg = x * math.exp(lg)
            if xg <= -1.0:
                raise SingularIntegrandError(
                    f"1 + x g(t) = {1.0 + xg!r} <= 0 at t = {t!r} for x = {x!r}"
                )
            return math.log1p(xg)
    return h


def w0_integral(x: Number, tol: ToleranceConfig | None = None) -> Number:
    """``W0(x)`` from ``(1/pi) * int_0^pi log(1 + x (sin t/t) e^{t cot t}) dt``.

    Real ``x`` gives a float; complex ``x`` a complex, using the principal
    logarithm. Raises :class:`SingularIntegrandError` when ``1 + x g(t)``
    touches the negative real axis, which for real ``x`` means
    ``x < -1/e``, and :class:`ConvergenceError` if the quadrature fails.
    """
    x = _as_number(x)
    tol = tol or ToleranceConfig()
    if isinstance(x, float) and x < BRANCH_POINT:
        raise SingularIntegrandError(
            f"x = {x!r} lies on the real ray x < -1/e: 1 + x g(t) changes sign on [0, pi]"
        )
    h = _integrand(x)
    # t = 0 is where |x g| peaks; check it before any quadrature node.
    h(0.0)
    res = integrate(h, (0.0, math.pi), tol)
    if not res.converged:
        raise ConvergenceError(
            f"quadrature for W0({x!r}) did not converge: "
            f"error estimate {res.error_estimate:.3g} after {res.evaluations} evaluations"
        )
    return res.value / math.pi


def omega(tol: ToleranceConfig | None = None) -> float:
    """The omega constant ``W0(1)``, by the integral representation."""
    return w0_integral(1.0, tol)


def series_coefficient(n: int) -> Fraction:
    """Exact Taylor coefficient ``(-n)^(n-1) / n!`` of ``W0`` at the origin."""
    if n < 1:
        raise DomainError(f"coefficient index must be >= 1, got {n}")
    return Fraction((-n) ** (n - 1), math.factorial(n))


def _series_ratio(n: int) -> float:
    # c_{n+1} / c_n = -(1 + 1/n)^(n-1)
    return -math.exp((n - 1) * math.log1p(1.0 / n))


def w0_series(x: Number, terms: int | str = "auto") -> Number:
    """Partial sum of the Taylor series of ``W0`` at 0, for ``|x| < 1/e``.

    Each term is obtained from the previous one through the coefficient
    ratio, so no factorials or large powers are formed. With
    ``terms="auto"`` summation stops once the next term is below
    ``1e-16`` of the partial sum, or after 200 terms.
    """
    x = _as_number(x)
    if not abs(x) < INV_E:
        raise DomainError(f"series needs |x| < 1/e, got |x| = {abs(x)!r}")
    if terms == "auto":
        n_max, auto = SERIES_MAX_TERMS, True
    else:
        n_max, auto = int(terms), False
        if n_max < 1:
            raise DomainError(f"terms must be a positive integer, got {terms!r}")
    term = x
    total = x
    parts = [x]
    for n in range(1, n_max):
        term = term * _series_ratio(n) * x
        if term == 0 or (auto and abs(term) < SERIES_REL_CUTOFF * abs(total)):
            break
        total += term
        parts.append(term)
    if isinstance(x, complex):
        return complex(math.fsum(t.real for t in parts), math.fsum(t.imag for t in parts))
    return math.fsum(parts)


def is_principal(w: Number, slack: float = 1e-9) -> bool:
    """Whether ``w`` lies in the range of the principal branch.

    That range is bounded by the curve ``-y cot y + i y`` for ``|y| < pi``;
    ``slack`` admits points on the boundary itself (images of the cut).
    """
    w = complex(w)
    y = w.imag
    if abs(y) >= math.pi:
        return False
    edge = -1.0 if y == 0.0 else -y / math.tan(y)
    return w.real >= edge - slack * max(1.0, abs(edge))


def _halley(x: Number, w: Number, tol: ToleranceConfig) -> Number | None:
    target = max(1e-15, 1e-15 * abs(x))
    best, best_r = None, math.inf
    exp = cmath.exp if isinstance(x, complex) else math.exp
    for _ in range(tol.max_iterations):
        try:
            ew = exp(w)
        except OverflowError:
            return None
        f = w * ew - x
        r = abs(f)
        if not math.isfinite(r):
            return None
        if r < best_r:
            best, best_r = w, r
        if r <= target:
            return w
        wp1 = w + 1.0
        if wp1 == 0:
            return None
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w_next = w - step
        if abs(step) <= 4.0 * _EPS * abs(w_next):
            # At the resolution of doubles. Accept if the residual is at the
            # rounding floor of evaluating w e^w - x near the root.
            floor = 8.0 * _EPS * max(abs(x), abs(w_next * exp(w_next))) * max(1.0, abs(wp1))
            return best if best_r <= max(target, floor) else None
        w = w_next
    return None


def _halley_starts(x: Number):
    if isinstance(x, complex):
        if 1.0 + x != 0:
            yield cmath.log(1.0 + x)
        p = cmath.sqrt(2.0 * (math.e * x + 1.0))
        yield -1.0 + p - p * p / 3.0
        if abs(x) > 3.0:
            lx = cmath.log(x)
            yield lx - cmath.log(lx)
        yield 0j
    else:
        if x >= 0:
            yield math.log1p(x)
        else:
            yield x * math.e
            yield -1.0 + math.sqrt(max(0.0, 2.0 * (math.e * x + 1.0)))


def w0_halley(x: Number, tol: ToleranceConfig | None = None) -> Number:
    """``W0(x)`` by Halley's iteration on ``f(w) = w e^w - x``.

    Stops when ``|w e^w - x| <= max(1e-15, 1e-15 |x|)``, or when the
    iterate stops moving and the residual is at the rounding floor of its
    own evaluation. Several starting points are tried in a fixed order; a
    root outside the principal range does not count.
    """
    x = _as_number(x)
    tol = tol or ToleranceConfig()
    if isinstance(x, float):
        if x < BRANCH_POINT:
            raise DomainError(f"x = {x!r} lies on the real ray x < -1/e, where W0 is not real")
        if x == BRANCH_POINT:
            return -1.0
        if x == 0.0:
            return 0.0
    for w0 in _halley_starts(x):
        w = _halley(x, w0, tol)
        if w is not None and is_principal(w):
            return w
    raise ConvergenceError(f"Halley iteration for W0({x!r}) did not converge")


@dataclass(frozen=True)
class NBCheckRecord:
    nu: float
    lhs: float
    rhs: float
    rel_error: float


def _check_nu(nu) -> float:
    nu = float(nu)
    if not (math.isfinite(nu) and nu >= 0):
        raise DomainError(f"nu must be finite and >= 0, got {nu!r}")
    return nu


def nb_rhs(nu: float) -> float:
    """``pi nu^nu / Gamma(1 + nu)``, with ``0^0 = 1``."""
    nu = _check_nu(nu)
    if nu == 0.0:
        return math.pi
    return math.exp(math.log(math.pi) + nu * math.log(nu) - log_gamma(1.0 + nu))


def nb_lhs(nu: float, tol: ToleranceConfig | None = None) -> float:
    """Quadrature of ``g(t)^nu`` over ``[0, pi]``."""
    nu = _check_nu(nu)
    res = integrate(lambda t: kernel_power(t, nu), (0.0, math.pi), tol or ToleranceConfig())
    if not res.converged:
        raise ConvergenceError(f"quadrature of g^{nu} did not converge")
    return res.value


def nb_check(nu: float, tol: ToleranceConfig | None = None) -> NBCheckRecord:
    lhs = nb_lhs(nu, tol)
    rhs = nb_rhs(nu)
    return NBCheckRecord(float(nu), lhs, rhs, abs(lhs - rhs) / max(abs(rhs), 1e-300))


def series_integral_consistency(x: float, n: int, tol: ToleranceConfig | None = None) -> float:
    """Largest gap between the integral and series forms of each term.

    For ``nu = 1..n`` compares ``(-1)^(nu-1) x^nu / nu * (1/pi) int g^nu``
    against ``(-nu)^(nu-1) / nu! * x^nu``.
    """
    x = float(x)
    if not abs(x) <= 0.3:
        raise DomainError(f"need |x| <= 0.3, got {x!r}")
    if not 1 <= n <= 30:
        raise DomainError(f"need 1 <= n <= 30, got {n!r}")
    worst = 0.0
    for nu in range(1, n + 1):
        xn = x**nu
        from_integral = (-1) ** (nu - 1) * xn / nu * nb_lhs(nu, tol) / math.pi
        from_series = float(series_coefficient(nu)) * xn
        worst = max(worst, abs(from_integral - from_series))
    return worst
