"""Kernel of the Nuttall-Bouwkamp integral, log-gamma, and shared tolerances.

The kernel is

    g(t) = (sin t / t) * exp(t cot t),    0 <= t <= pi,

which decreases strictly from ``e`` at ``t = 0`` to ``0`` at ``t = pi``.
Both endpoints are removable singularities of the formula, so the kernel is
evaluated through its logarithm with series expansions near each end.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "DomainError",
    "KernelPoint",
    "ToleranceConfig",
    "kernel",
    "kernel_power",
    "log_gamma",
]

# Low-order bits of pi that the double ``math.pi`` drops.
_PI_LO = 1.2246467991473532e-16

SMALL_T = 1e-2
NEAR_PI = 1e-8
# exp(x) underflows to zero (or subnormals) below this.
EXP_UNDERFLOW = -745.0


class DomainError(ValueError):
    """Argument outside the domain of an operation."""


@dataclass(frozen=True)
class ToleranceConfig:
    """Tolerances shared by the quadrature and the iterative solvers."""

    abs_tol: float = 1e-13
    rel_tol: float = 1e-12
    max_subdivisions: int = 2000
    max_iterations: int = 100

    def __post_init__(self):
        for name in ("abs_tol", "rel_tol"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise DomainError(f"{name} must be finite and >= 0, got {v!r}")
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise DomainError("abs_tol and rel_tol cannot both be zero")
        if self.max_subdivisions < 1 or self.max_iterations < 1:
            raise DomainError("max_subdivisions and max_iterations must be >= 1")

    def bound(self, magnitude: float) -> float:
        """Acceptable absolute error for a result of the given magnitude."""
        return max(self.abs_tol, self.rel_tol * magnitude)


@dataclass(frozen=True)
class KernelPoint:
    t: float
    g: float
    log_g: float


def _check_t(t: float) -> float:
    t = float(t)
    if not (math.isfinite(t) and 0.0 <= t <= math.pi):
        raise DomainError(f"t must lie in [0, pi], got {t!r}")
    return t


def _log_g(t: float) -> float:
    if t < SMALL_T:
        # log(sin t/t) + t cot t = 1 - t^2/2 - t^4/36 - t^6/405 - t^8/4200 - ...
        s = t * t
        return 1.0 - s * (0.5 + s * (1.0 / 36 + s * (1.0 / 405 + s / 4200.0)))
    if t == math.pi:
        return -math.inf
    eps = math.pi - t
    if eps < NEAR_PI:
        # Reflect about pi; eps carries the bits of pi lost in math.pi.
        eps += _PI_LO
        sin_eps = eps * (1.0 - eps * eps / 6.0)
        cos_eps = 1.0 - eps * eps / 2.0
        return math.log(sin_eps / t) - t * cos_eps / sin_eps
    return math.log(math.sin(t) / t) + t / math.tan(t)


def kernel(t: float) -> KernelPoint:
    """Evaluate ``g(t)`` and ``log g(t)`` on the closed interval ``[0, pi]``.

    ``g`` is exactly 0 once ``log g`` falls below the double-precision
    underflow threshold of ``exp``; at ``t = pi`` itself ``log_g`` is ``-inf``.
    """
    t = _check_t(t)
    lg = _log_g(t)
    g = 0.0 if lg < EXP_UNDERFLOW else math.exp(lg)
    return KernelPoint(t, g, lg)


def kernel_power(t: float, nu: float) -> float:
    """Return ``g(t)**nu`` as ``exp(nu * log g)``, with ``0**0 == 1``."""
    t = _check_t(t)
    nu = float(nu)
    if not (math.isfinite(nu) and nu >= 0):
        raise DomainError(f"nu must be finite and >= 0, got {nu!r}")
    if nu == 0.0:
        return 1.0
    e = nu * _log_g(t)
    return 0.0 if e < EXP_UNDERFLOW else math.exp(e)


# Lanczos approximation, g = 7, nine coefficients.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

_EULER_GAMMA = 0.5772156649015329
# zeta(k) - 1 for k = 2..30
_ZETA_M1 = (
    0.6449340668482264,
    0.2020569031595943,
    0.08232323371113819,
    0.03692775514336993,
    0.01734306198444914,
    0.008349277381922827,
    0.00407735619794434,
    0.0020083928260822143,
    0.0009945751278180853,
    0.0004941886041194645,
    0.0002460865533080483,
    0.00012271334757848915,
    6.124813505870483e-05,
    3.058823630702049e-05,
    1.528225940865187e-05,
    7.637197637899763e-06,
    3.81729326499984e-06,
    1.908212716553939e-06,
    9.539620338727962e-07,
    4.769329867878064e-07,
    2.38450502727733e-07,
    1.1921992596531106e-07,
    5.960818905125948e-08,
    2.980350351465228e-08,
    1.4901554828365043e-08,
    7.45071178983543e-09,
    3.725334024788457e-09,
    1.862659723513049e-09,
    9.313274324196682e-10,
)


def _log_gamma_2_plus(z: float) -> float:
    # ln Gamma(2 + z) = (1 - gamma) z + sum_{k>=2} (-1)^k (zeta(k) - 1) z^k / k, |z| < 2
    acc = 0.0
    for k in range(len(_ZETA_M1) + 1, 1, -1):
        acc = acc * -z + _ZETA_M1[k - 2] / k
    return z * ((1.0 - _EULER_GAMMA) + z * acc)


def _log_gamma_lanczos(x: float) -> float:
    x -= 1.0
    a = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        a += _LANCZOS[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (x + 0.5) * math.log(t) - t + math.log(a)


def log_gamma(x: float) -> float:
    """Natural log of the Gamma function for positive real ``x``.

    Near the zeros of ``ln Gamma`` at 1 and 2 a Taylor series about 2 keeps
    the relative error small; elsewhere a Lanczos sum is used.
    """
    x = float(x)
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"log_gamma needs finite x > 0, got {x!r}")
    if x < 0.5:
        return log_gamma(x + 1.0) - math.log(x)
    if x <= 1.5:
        z = x - 1.0
        return _log_gamma_2_plus(z) - math.log1p(z)
    if x <= 2.5:
        return _log_gamma_2_plus(x - 2.0)
    return _log_gamma_lanczos(x)
