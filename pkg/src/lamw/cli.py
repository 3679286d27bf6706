"""Command-line interface: ``lamw {w0,omega,nb-check,explore,selftest}``.

Exit status is 0 on success, 1 on a usage or domain error and 2 when a
numerical method fails to converge. Numbers are printed in shortest
round-trip form so output is byte-stable across runs.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

from . import explorer, lambert
from .special import DomainError, ToleranceConfig

EXIT_OK, EXIT_USAGE, EXIT_NOCONV = 0, 1, 2

NB_SWEEP = (0, 0.25, 0.5, 1, 1.5, 2, 3, 3.7, 5, 10, 20)
ROUND_TRIP_X = (0.01, 0.1, 0.5, 1, 2, math.e, 5, 10, 100)
CROSS_X = (0.05, -0.05, 0.15, -0.15, 0.3, -0.3)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return v


def _complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2 or any(p != p.strip() or not p for p in parts):
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")
    return complex(_float(parts[0]), _float(parts[1]))


def _float_list(text: str) -> list[float]:
    return [_float(p) for p in text.split(",")]


def _num(v):
    """JSON-friendly value: complex numbers become {"re", "im"}."""
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return v


def _fmt(v) -> str:
    if isinstance(v, complex):
        return f"{v.real!r},{v.imag!r}"
    return repr(float(v))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lamw", description="Lambert W0 through the Nuttall-Bouwkamp integral.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    w0 = sub.add_parser("w0", help="evaluate W0 at a real or complex point")
    w0.add_argument("x", nargs="?", type=_float)
    w0.add_argument("--method", choices=("integral", "series", "halley"), default="integral")
    w0.add_argument("--complex", dest="cx", type=_complex, metavar="RE,IM")
    w0.add_argument("--rtol", type=_float)
    w0.add_argument("--atol", type=_float)
    w0.add_argument("--json", action="store_true")

    om = sub.add_parser("omega", help="the omega constant W0(1)")
    om.add_argument("--rtol", type=_float)
    om.add_argument("--json", action="store_true")

    nb = sub.add_parser("nb-check", help="check the Nuttall-Bouwkamp identity")
    g = nb.add_mutually_exclusive_group(required=True)
    g.add_argument("--nu", type=_float)
    g.add_argument("--nu-list", type=_float_list)
    nb.add_argument("--json", action="store_true")

    ex = sub.add_parser("explore", help="classify a complex grid, CSV output")
    for name in ("--re-min", "--re-max", "--im-min", "--im-max"):
        ex.add_argument(name, type=_float, required=True)
    ex.add_argument("--nx", type=int, required=True)
    ex.add_argument("--ny", type=int, required=True)
    ex.add_argument("--out")
    ex.add_argument("--workers", type=int, default=1)

    st = sub.add_parser("selftest", help="run the built-in consistency checks")
    st.add_argument("--json", action="store_true")
    return p


def _tolerance(args) -> ToleranceConfig:
    base = ToleranceConfig()
    kw = {}
    for env, key in (("LAMW_RTOL", "rel_tol"), ("LAMW_ATOL", "abs_tol")):
        if env in os.environ:
            try:
                kw[key] = _float(os.environ[env])
            except argparse.ArgumentTypeError as e:
                raise UsageError(f"{env}: {e}")
    if getattr(args, "rtol", None) is not None:
        kw["rel_tol"] = args.rtol
    if getattr(args, "atol", None) is not None:
        kw["abs_tol"] = args.atol
    return ToleranceConfig(
        abs_tol=kw.get("abs_tol", base.abs_tol),
        rel_tol=kw.get("rel_tol", base.rel_tol),
    )


def _cmd_w0(args, tol, out):
    if (args.x is None) == (args.cx is None):
        raise UsageError("w0 needs exactly one of <x> or --complex RE,IM")
    x = args.cx if args.cx is not None else args.x
    if args.method == "integral":
        w = lambert.w0_integral(x, tol)
    elif args.method == "series":
        w = lambert.w0_series(x)
    else:
        w = lambert.w0_halley(x, tol)
    if args.json:
        out.write(json.dumps({"x": _num(x), "method": args.method, "value": _num(w)}) + "\n")
    else:
        out.write(_fmt(w) + "\n")


def _cmd_omega(args, tol, out):
    w = lambert.omega(tol)
    if args.json:
        out.write(json.dumps({"value": w}) + "\n")
    else:
        out.write(_fmt(w) + "\n")


def _cmd_nb_check(args, tol, out):
    nus = [args.nu] if args.nu is not None else args.nu_list
    records = [lambert.nb_check(nu, tol) for nu in nus]
    if args.json:
        out.write(json.dumps({"records": [r.__dict__ for r in records]}) + "\n")
        return
    for r in records:
        out.write(f"nu={r.nu!r} lhs={r.lhs!r} rhs={r.rhs!r} rel_error={r.rel_error!r}\n")


def _cmd_explore(args, tol, out):
    spec = explorer.GridSpec(
        args.re_min, args.re_max, args.im_min, args.im_max, args.nx, args.ny, tol=tol
    )
    cells = explorer.sweep(spec, workers=args.workers)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            explorer.write_csv(cells, fh)
    else:
        explorer.write_csv(cells, out)


def selftest_checks(tol: ToleranceConfig | None = None) -> list[dict]:
    """NB sweep, round-trip and integral-vs-series checks, one dict per check."""
    tol = tol or ToleranceConfig()
    checks = []
    for nu in NB_SWEEP:
        r = lambert.nb_check(nu, tol)
        checks.append({"name": f"nb nu={nu!r}", "value": r.rel_error, "bound": 1e-10})
    for x in ROUND_TRIP_X:
        w = lambert.w0_integral(x, tol)
        checks.append(
            {
                "name": f"round-trip x={x!r}",
                "value": abs(w * math.exp(w) - x),
                "bound": 1e-9 * max(1.0, abs(x)),
            }
        )
    for x in CROSS_X:
        d = abs(lambert.w0_integral(x, tol) - lambert.w0_series(x))
        checks.append({"name": f"integral-vs-series x={x!r}", "value": d, "bound": 1e-10})
    for c in checks:
        c["passed"] = c["value"] <= c["bound"]
    return checks


def _cmd_selftest(args, tol, out):
    checks = selftest_checks(tol)
    ok = all(c["passed"] for c in checks)
    if args.json:
        out.write(json.dumps({"passed": ok, "checks": checks}) + "\n")
    else:
        for c in checks:
            tag = "PASS" if c["passed"] else "FAIL"
            out.write(f"{tag} {c['name']} value={c['value']!r} bound={c['bound']!r}\n")
        out.write(("all checks passed" if ok else "some checks FAILED") + "\n")
    return EXIT_OK if ok else EXIT_USAGE


_COMMANDS = {
    "w0": _cmd_w0,
    "omega": _cmd_omega,
    "nb-check": _cmd_nb_check,
    "explore": _cmd_explore,
    "selftest": _cmd_selftest,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        tol = _tolerance(args)
        return _COMMANDS[args.command](args, tol, out) or EXIT_OK
    except UsageError as e:
        err.write(f"lamw: usage error: {e}\n")
        return EXIT_USAGE
    except DomainError as e:
        err.write(f"lamw: domain error: {e}\n")
        return EXIT_USAGE
    except lambert.ConvergenceError as e:
        err.write(f"lamw: no convergence: {e}\n")
        return EXIT_NOCONV


if __name__ == "__main__":
    sys.exit(main())
