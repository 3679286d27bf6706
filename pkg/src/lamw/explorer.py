"""Empirical map of where the integral representation reproduces W0.

Each sample point ``x`` of a rectangular grid in the complex plane gets the
integral value, the Halley value, and one status:

``valid``
    both computed and within ``max(match_abs, match_rel * |w_ref|)``
``mismatch``
    both computed, but further apart than that
``integral_singular``
    ``1 + x g(t)`` hit the cut of the logarithm
``integral_no_converge``
    the quadrature ran out of subdivisions
``oracle_fail``
    Halley's iteration found no principal-branch root
"""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO

import numpy as np

from .lambert import ConvergenceError, SingularIntegrandError, w0_halley, w0_integral
from .special import DomainError, ToleranceConfig

__all__ = [
    "CSV_HEADER",
    "STATUSES",
    "GridCell",
    "GridSpec",
    "classify_point",
    "status_grid",
    "sweep",
    "write_csv",
]

STATUSES = ("valid", "mismatch", "integral_singular", "integral_no_converge", "oracle_fail")
CSV_HEADER = ("re", "im", "w_int_re", "w_int_im", "w_ref_re", "w_ref_im", "abs_err", "status")

MATCH_ABS = 1e-8
MATCH_REL = 1e-6


@dataclass(frozen=True)
class GridSpec:
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    nx: int = 100
    ny: int = 100
    tol: ToleranceConfig = field(default_factory=ToleranceConfig)
    match_abs: float = MATCH_ABS
    match_rel: float = MATCH_REL

    def __post_init__(self):
        bounds = (self.re_min, self.re_max, self.im_min, self.im_max)
        if not all(math.isfinite(b) for b in bounds):
            raise DomainError(f"grid bounds must be finite, got {bounds}")
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise DomainError("grid needs re_min < re_max and im_min < im_max")
        if self.nx < 2 or self.ny < 2:
            raise DomainError(f"grid needs nx, ny >= 2, got {self.nx} x {self.ny}")
        if not (self.match_abs > 0 and self.match_rel > 0):
            raise DomainError("match_abs and match_rel must be positive")

    def points(self) -> list[complex]:
        """Sample points in row-major order, real part varying fastest."""
        re = np.linspace(self.re_min, self.re_max, self.nx).tolist()
        im = np.linspace(self.im_min, self.im_max, self.ny).tolist()
        return [complex(a, b) for b in im for a in re]


@dataclass(frozen=True)
class GridCell:
    x: complex
    w_int: Optional[complex]
    w_ref: Optional[complex]
    abs_err: Optional[float]
    status: str

    def row(self) -> list[str]:
        """CSV fields; floats in shortest round-trip form, absent ones empty."""

        def fmt(v):
            return "" if v is None else repr(float(v))

        wi = self.w_int
        wr = self.w_ref
        return [
            fmt(self.x.real),
            fmt(self.x.imag),
            fmt(None if wi is None else wi.real),
            fmt(None if wi is None else wi.imag),
            fmt(None if wr is None else wr.real),
            fmt(None if wr is None else wr.imag),
            fmt(self.abs_err),
            self.status,
        ]


def classify_point(
    x: complex,
    match_abs: float = MATCH_ABS,
    match_rel: float = MATCH_REL,
    tol: ToleranceConfig | None = None,
) -> GridCell:
    """Compare the integral and Halley values of ``W0`` at ``x``.

    Never raises for a finite ``x``; every failure becomes a status.
    """
    x = complex(x)
    tol = tol or ToleranceConfig()
    w_int = w_ref = None
    status = None
    try:
        w_int = complex(w0_integral(x, tol))
    except SingularIntegrandError:
        status = "integral_singular"
    except ConvergenceError:
        status = "integral_no_converge"
    try:
        w_ref = complex(w0_halley(x, tol))
    except (ConvergenceError, DomainError):
        status = status or "oracle_fail"
    if status is not None:
        return GridCell(x, w_int, w_ref, None, status)
    err = abs(w_int - w_ref)
    ok = err <= max(match_abs, match_rel * abs(w_ref))
    return GridCell(x, w_int, w_ref, err, "valid" if ok else "mismatch")


def _classify(args):
    return classify_point(*args)


def sweep(spec: GridSpec, workers: int = 1) -> list[GridCell]:
    """Classify every grid point; cells come back in :meth:`GridSpec.points` order.

    ``workers > 1`` spreads cells over processes without changing the order
    or the values.
    """
    jobs = [(x, spec.match_abs, spec.match_rel, spec.tol) for x in spec.points()]
    if workers <= 1:
        return [_classify(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_classify, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def write_csv(cells: Iterable[GridCell], out: TextIO | None = None) -> str | None:
    """Write cells as CSV to ``out``, or return the text if ``out`` is None."""
    buf = io.StringIO() if out is None else out
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for cell in cells:
        w.writerow(cell.row())
    return buf.getvalue() if out is None else None


def status_grid(cells: list[GridCell], spec: GridSpec) -> np.ndarray:
    """Statuses as an ``(ny, nx)`` array of indices into :data:`STATUSES`."""
    idx = np.array([STATUSES.index(c.status) for c in cells], dtype=np.int8)
    return idx.reshape(spec.ny, spec.nx)
