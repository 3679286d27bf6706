"""
Where does the integral equal W0?
=================================

Classify a grid of complex points by comparing the integral against
Halley's iteration. The only failures turn up on the real ray ``x < -1/e``,
where ``1 + x g(t)`` runs through zero.
"""
import collections

from lamw import GridSpec, status_grid, sweep, write_csv
from lamw.explorer import STATUSES

spec = GridSpec(-3.0, 3.0, -2.0, 2.0, nx=121, ny=81)
cells = sweep(spec)
print(collections.Counter(c.status for c in cells))

bad = [c.x for c in cells if c.status != "valid"]
print("non-valid points:", len(bad))
print("  all on the real axis:", all(x.imag == 0 for x in bad))
print("  largest real part:", max(x.real for x in bad) if bad else None)

with open("validity_map.csv", "w", newline="") as fh:
    write_csv(cells, fh)
print("wrote validity_map.csv")

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    grid = status_grid(cells, spec)
    fig, ax = plt.subplots(figsize=(7, 5))
    im = ax.imshow(
        grid,
        origin="lower",
        extent=(spec.re_min, spec.re_max, spec.im_min, spec.im_max),
        vmin=0,
        vmax=len(STATUSES) - 1,
        cmap="viridis",
        interpolation="nearest",
    )
    cbar = fig.colorbar(im, ax=ax, ticks=range(len(STATUSES)))
    cbar.ax.set_yticklabels(STATUSES)
    ax.set_xlabel("Re x")
    ax.set_ylabel("Im x")
    fig.savefig("validity_map.png", dpi=120)
    print("wrote validity_map.png")
