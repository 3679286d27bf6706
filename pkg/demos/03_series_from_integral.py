"""
Term by term
============

Dividing the Nuttall-Bouwkamp identity by ``nu`` and multiplying by
``(-1)^(nu - 1) x^nu`` turns each integral into one Taylor term of W0.
Here every term is computed both ways.
"""
import math

from lamw import nb_lhs, series_coefficient, series_integral_consistency

x = 0.2
print(f"{'nu':>3} {'from integral':>24} {'from series':>24} {'gap':>9}")
for nu in range(1, 11):
    from_integral = (-1) ** (nu - 1) * x**nu / nu * nb_lhs(nu) / math.pi
    from_series = float(series_coefficient(nu)) * x**nu
    print(f"{nu:>3} {from_integral!r:>24} {from_series!r:>24} {abs(from_integral - from_series):>9.1e}")

for x, n in ((0.2, 10), (-0.3, 15), (0.3, 30)):
    print(f"max gap for x = {x}, {n} terms: {series_integral_consistency(x, n):.1e}")

# Exact coefficients, for reference.
print([str(series_coefficient(n)) for n in range(1, 8)])
