"""
The kernel and the Nuttall-Bouwkamp identity
============================================

The kernel ``g(t) = (sin t / t) exp(t cot t)`` falls from ``e`` to ``0`` on
``[0, pi]``. Raised to any power ``nu >= 0`` and integrated, it gives
``pi nu^nu / Gamma(1 + nu)``.
"""
import math

import numpy as np

from lamw import kernel, nb_check

# The formula is 0/0 at t = 0 and inf * 0 at t = pi, but the kernel is
# evaluated through its logarithm and is finite everywhere.
for t in (0.0, 1e-9, 1.0, math.pi / 2, 3.0, math.pi - 1e-9, math.pi):
    k = kernel(t)
    print(f"t = {t!r:<22} g = {k.g!r:<22} log g = {k.log_g!r}")

# Both sides of the identity for a spread of exponents.
print()
print(f"{'nu':>6} {'quadrature':>24} {'closed form':>24} {'rel. error':>10}")
for nu in (0, 0.25, 0.5, 1, 2, 3.7, 10, 20):
    r = nb_check(nu)
    print(f"{r.nu:>6} {r.lhs!r:>24} {r.rhs!r:>24} {r.rel_error:>10.1e}")

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    ts = np.linspace(0, math.pi, 400)
    fig, ax = plt.subplots()
    for nu in (0.5, 1, 2, 5):
        ax.plot(ts, [kernel(float(t)).g ** nu for t in ts], label=f"nu = {nu}")
    ax.set_xlabel("t")
    ax.set_ylabel("g(t)^nu")
    ax.legend()
    fig.savefig("kernel.png", dpi=120)
    print("\nwrote kernel.png")
