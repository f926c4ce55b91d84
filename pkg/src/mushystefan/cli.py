"""Command-line front end.

Subcommands: ``solve``, ``profile``, ``sweep``, ``limit``, ``verify``,
``equiv``. Exit status 0 on success, 1 on a domain error (subcritical data,
invalid parameters, failed verification), 2 on a usage error.

Any flag may also come from ``--config FILE``: UTF-8 ``key = value`` lines
with ``#`` comments, keys spelled like the flags without dashes
(``h0 = 10``, ``h0-decades = 1:6:11``). Flags on the command line win.
"""
from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import numpy as np

from . import asymptotics, equivalence, numerics, solver, verify
from .errors import MushyStefanError, Subcritical
from .model import Convective, Flux, Kind, Material, MushyZone, Temperature, validate

SUBCOMMANDS = ("solve", "profile", "sweep", "limit", "verify", "equiv")
PROBLEMS = ("p1", "p2", "p3", "p1limit")
SWEEP_PARAMS = ("h0", "q0", "d0", "dinf", "gamma", "epsilon", "k", "rho", "c", "latent")


class DomainError(Exception):
    pass


def fmt(value) -> str:
    """Shortest round-trip representation (at most 17 significant digits)."""
    if value is None:
        return ""
    return repr(float(value))


def _float_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _range_spec(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected lo:hi:n, got {text!r}")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi:n, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("n must be at least 1")
    return lo, hi, n


def _common(p):
    g = p.add_argument_group("material and mushy zone")
    g.add_argument("--config", type=Path, help="key = value file; flags override it")
    g.add_argument("--k", type=float, default=1.0, help="thermal conductivity W/(m C)")
    g.add_argument("--rho", type=float, default=1.0, help="density kg/m^3")
    g.add_argument("--c", type=float, default=1.0, help="specific heat J/(kg C)")
    g.add_argument("--latent", type=float, default=1.0, help="latent heat J/kg")
    g.add_argument("--gamma", type=float, default=0.1)
    g.add_argument("--epsilon", type=float, default=0.5)
    b = p.add_argument_group("boundary condition")
    b.add_argument("--problem", choices=PROBLEMS, help="inferred from --h0/--q0/--d0 when omitted")
    b.add_argument("--dinf", type=float, help="bulk temperature magnitude (p1, p1limit)")
    b.add_argument("--h0", type=float, help="heat transfer coefficient (p1)")
    b.add_argument("--q0", type=float, help="flux coefficient (p3)")
    b.add_argument("--d0", type=float, help="face temperature magnitude (p2)")
    p.add_argument("--output", type=Path, help="write CSV here instead of standard output")


def build_parser():
    parser = argparse.ArgumentParser(prog="mushystefan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one problem and print the front coefficients")
    _common(p)

    p = sub.add_parser("profile", help="temperature samples as CSV (t,x,temperature)")
    _common(p)
    p.add_argument("--t", type=_float_list, default=[0.1, 1.0, 10.0], help="comma-separated times")
    p.add_argument("--nx", type=int, default=21, help="points across [0, s(t)]")

    p = sub.add_parser("sweep", help="vary one parameter; CSV of xi, mu against it")
    _common(p)
    p.add_argument("--param", choices=SWEEP_PARAMS, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--values", type=_float_list)
    grp.add_argument("--linspace", type=_range_spec, metavar="LO:HI:N")
    grp.add_argument("--logspace", type=_range_spec, metavar="LO:HI:N", help="decade exponents")

    p = sub.add_parser("limit", help="h0 -> inf convergence table")
    _common(p)
    p.add_argument("--h0-decades", type=_range_spec, default=(1.0, 6.0, 11), metavar="LO:HI:N")

    p = sub.add_parser("verify", help="residuals of every governing condition")
    _common(p)
    p.add_argument("--fd-step", type=float, default=1e-4)

    p = sub.add_parser("equiv", help="compare with the equivalent temperature problem")
    _common(p)
    return parser


def _config_tokens(path):
    tokens = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise argparse.ArgumentTypeError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        tokens += ["--" + key.replace("_", "-"), value]
    return tokens


def _expand_config(argv):
    """Insert config-file flags right after the subcommand so later flags win."""
    argv = list(argv)
    if "--config" not in argv and not any(a.startswith("--config=") for a in argv):
        return argv
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", type=Path)
    known, _ = pre.parse_known_args(argv)
    pos = next((i for i, a in enumerate(argv) if a in SUBCOMMANDS), None)
    if known.config is None or pos is None:
        return argv
    return argv[: pos + 1] + _config_tokens(known.config) + argv[pos + 1:]


def _problem(args):
    if args.problem:
        return args.problem
    if args.h0 is not None:
        return "p1"
    if args.q0 is not None:
        return "p3"
    if args.d0 is not None:
        return "p2"
    raise argparse.ArgumentTypeError("cannot infer --problem; pass --h0, --q0 or --d0")


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise argparse.ArgumentTypeError("missing " + ", ".join("--" + n for n in missing))


def _inputs(args):
    problem = _problem(args)
    m = Material(args.k, args.rho, args.c, args.latent)
    z = MushyZone(args.gamma, args.epsilon)
    if problem == "p1":
        _require(args, "h0", "dinf")
        bc = Convective(args.h0, args.dinf)
    elif problem == "p3":
        _require(args, "q0")
        bc = Flux(args.q0)
    elif problem == "p2":
        _require(args, "d0")
        bc = Temperature(args.d0)
    else:
        _require(args, "dinf")
        bc = Temperature(args.dinf)
    validate(m, z, bc)
    return problem, m, z, bc


def _solve(problem, m, z, bc):
    if problem == "p1limit":
        return solver.solve_p1_limit(m, z, bc.d0)
    return solver.solve(m, z, bc)


def _threshold(problem, m, z, bc):
    return solver.threshold(m, z, bc) if problem in ("p1", "p3") else None


def _d0_equiv(sol):
    if sol.kind in (Kind.P1, Kind.P3):
        return equivalence.induced_d0(sol)
    return -sol.fixed_face_temperature


def _open_out(args, out):
    if args.output is None:
        return out, False
    return open(args.output, "w", encoding="utf-8", newline=""), True


def _write_csv(args, out, header, rows, trailer=None):
    handle, close = _open_out(args, out)
    try:
        w = csv.writer(handle, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        if trailer:
            handle.write(trailer + "\n")
    finally:
        if close:
            handle.close()


def cmd_solve(args, out, err):
    problem, m, z, bc = _inputs(args)
    sol = _solve(problem, m, z, bc)
    report = verify.full_report(sol)
    if not report.passed:
        raise DomainError("solution failed verification: " + ", ".join(report.failures()))
    lines = [
        ("problem", problem),
        ("xi", fmt(sol.xi)),
        ("mu", fmt(sol.mu)),
        ("d0_equiv", fmt(_d0_equiv(sol))),
        ("threshold", fmt(_threshold(problem, m, z, bc)) or "none"),
        ("face_temperature", fmt(sol.fixed_face_temperature)),
    ]
    for key, value in lines:
        out.write(f"{key} = {value}\n")


def cmd_profile(args, out, err):
    problem, m, z, bc = _inputs(args)
    sol = _solve(problem, m, z, bc)
    if args.nx < 2:
        raise argparse.ArgumentTypeError("--nx must be at least 2")
    rows = []
    for t in args.t:
        if t <= 0:
            raise argparse.ArgumentTypeError("--t values must be positive")
        xs = np.linspace(0.0, sol.front_s(t), args.nx)
        for x, temp in zip(xs, sol.temperature(xs, t)):
            rows.append((fmt(t), fmt(x), fmt(temp)))
    _write_csv(args, out, ("t", "x", "temperature"), rows)


def _sweep_values(args):
    if args.values is not None:
        return args.values
    lo, hi, n = args.linspace or args.logspace
    values = np.linspace(lo, hi, n)
    return [float(v) for v in (10.0 ** values if args.logspace else values)]


def _with_param(args, name, value):
    return argparse.Namespace(**{**vars(args), name: value})


_SWEEP_PROBLEM = {"h0": "p1", "q0": "p3", "d0": "p2"}


def cmd_sweep(args, out, err):
    problem = args.problem or _SWEEP_PROBLEM.get(args.param) or _problem(args)
    rows = []
    failures = 0
    for value in _sweep_values(args):
        trial = _with_param(args, args.param, value)
        trial.problem = problem
        try:
            _, m, z, bc = _inputs(trial)
            sol = _solve(problem, m, z, bc)
            rows.append((args.param, fmt(value), fmt(sol.xi), fmt(sol.mu), fmt(_d0_equiv(sol)),
                         fmt(_threshold(problem, m, z, bc))))
        except MushyStefanError as exc:
            failures += 1
            threshold = getattr(exc, "threshold", None)
            rows.append((args.param, fmt(value), "", "", "", fmt(threshold)))
            err.write(f"{args.param}={fmt(value)}: {exc}\n")
    _write_csv(args, out, ("param", "value", "xi", "mu", "d0_equiv", "threshold"), rows)


def cmd_limit(args, out, err):
    _require(args, "dinf")
    m = Material(args.k, args.rho, args.c, args.latent)
    z = MushyZone(args.gamma, args.epsilon)
    validate(m, z, Temperature(args.dinf))
    lo, hi, n = args.h0_decades
    table = asymptotics.convergence_study(m, z, args.dinf, list(10.0 ** np.linspace(lo, hi, n)))
    rows = [(fmt(r.h0), fmt(r.xi), fmt(r.gap), fmt(r.mu), fmt(r.mu_gap)) for r in table.rows]
    _write_csv(args, out, ("h0", "xi", "gap", "mu", "mu_gap"), rows, f"# slope={fmt(table.fitted_slope)}")


def cmd_verify(args, out, err):
    problem, m, z, bc = _inputs(args)
    sol = _solve(problem, m, z, bc)
    report = verify.full_report(sol, g=verify.GridSpec(fd_step_scale=args.fd_step))
    out.write(f"grid = {report.grid_spec}\n")
    for name, value in (("pde", report.max_pde_residual), ("stefan", report.max_stefan_residual),
                        ("width", report.max_width_residual), ("bc", report.max_bc_residual)):
        status = "n/a" if value is None else ("ok" if value <= report.thresholds[name] else "FAIL")
        out.write(f"{name} = {fmt(value) or 'n/a'} ({status}, threshold {fmt(report.thresholds[name])})\n")
    if not report.passed:
        raise DomainError("verification failed: " + ", ".join(report.failures()))


def cmd_equiv(args, out, err):
    problem, m, z, bc = _inputs(args)
    if problem not in ("p1", "p3"):
        raise argparse.ArgumentTypeError("equiv needs --problem p1 or p3")
    sol = _solve(problem, m, z, bc)
    rep = equivalence.check_equivalence(sol)
    bound = equivalence.xi_bound(rep.d0_induced, z, m)
    lines = [
        ("d0_induced", fmt(rep.d0_induced)),
        ("xi_source", fmt(rep.xi_source)),
        ("xi_target", fmt(rep.xi_target)),
        ("xi_gap", fmt(rep.xi_gap)),
        ("max_temp_gap", fmt(rep.max_temp_gap)),
        ("fronts_gap", fmt(rep.fronts_gap)),
        ("erf_xi", fmt(numerics.erf(sol.xi))),
        ("erf_xi_bound", fmt(bound)),
    ]
    for key, value in lines:
        out.write(f"{key} = {value}\n")
    if not rep.passed():
        raise DomainError("equivalence gaps exceed tolerance")


COMMANDS = {
    "solve": cmd_solve,
    "profile": cmd_profile,
    "sweep": cmd_sweep,
    "limit": cmd_limit,
    "verify": cmd_verify,
    "equiv": cmd_equiv,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_expand_config(argv))
        COMMANDS[args.command](args, out, err)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (argparse.ArgumentTypeError, OSError) as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except Subcritical as exc:
        err.write(f"error: {exc}\n")
        err.write(f"threshold {exc.name}* = {fmt(exc.threshold)}\n")
        return 1
    except (MushyStefanError, DomainError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
