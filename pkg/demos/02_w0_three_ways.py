"""
W0 three ways
=============

The integral representation, the Taylor series at the origin and Halley's
iteration on ``w e^w = x`` compared side by side. The series only exists for
``|x| < 1/e``; the integral keeps working well past it.
"""
import math

from lamw import omega, w0_halley, w0_integral, w0_series

print(f"{'x':>10} {'integral':>22} {'series':>22} {'halley':>22}")
for x in (-0.3, -0.1, 0.05, 0.2, 0.35, 0.5, 1.0, math.e, 10.0, 100.0):
    wi = w0_integral(x)
    ws = w0_series(x) if abs(x) < math.exp(-1) else float("nan")
    wh = w0_halley(x)
    print(f"{x:>10.4g} {wi!r:>22} {ws!r:>22} {wh!r:>22}")

# The omega constant is the integral at x = 1, outside the series' disc.
w = omega()
print(f"\nomega = {w!r}")
print(f"omega * exp(omega) - 1 = {w * math.exp(w) - 1:.1e}")

# Complex arguments use the principal logarithm in the integrand.
for x in (0.5 + 2j, -2 + 0.5j, -1 + 1e-6j, 10 - 3j):
    wi = w0_integral(x)
    print(f"x = {x!s:>12}  W0 = {wi:.15f}  |diff to halley| = {abs(wi - w0_halley(x)):.1e}")
