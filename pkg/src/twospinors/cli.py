"""Command-line surface: emit matrices, verify identities, solve, sample fields.

Commands
    gamma            print the four gamma matrices, the metric, and the
                     anticommutation residual table
    lorentz          print the Lorentz matrix covered by a given 2x2 matrix
    verify           run the identity sweeps; nonzero exit on failure
    solve            fiber basis of the momentum-space equation at a point
    planewave-check  finite-difference residual of the position-space form
    sample-field     write one record per fiber-basis vector per grid node

All numeric output is decimal with 17 significant digits; files are UTF-8
with LF line endings, one record object per line, header line first.  Exit
codes: 0 success, 1 verification failure, 2 usage error, 3 numeric
precondition failure.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .bitensor import ETA, lorentz_of
from .bundle import (
    AssociatedClassRep,
    fiber_residual,
    rest_fiber_basis,
    split_conjugate_pair,
)
from .clifford import FourSpinor, gamma, tau
from .errors import (
    BadMass,
    BadStep,
    Degenerate,
    NotInFiber,
    NotOnShell,
    NotReal,
    NumericalDrift,
    InvalidClassRep,
)
from .momentum import boost_rep, shell_point
from .planewave import planewave_residual
from .spinor import SL2Element
from .verify import CONVENTIONS, run_verification

_NUMERIC_ERRORS = (
    BadMass,
    BadStep,
    Degenerate,
    NotInFiber,
    NotOnShell,
    NotReal,
    NumericalDrift,
    InvalidClassRep,
)

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# Deterministic serialization: every float is rendered with %.17g so that
# identical inputs produce byte-identical output.

def _g17(x: float) -> str:
    return "%.17g" % float(x)


def _jdump(obj) -> str:
    if isinstance(obj, dict):
        items = ", ".join(f"{_jdump(k)}: {_jdump(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_jdump(v) for v in obj) + "]"
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _g17(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _pairs(z) -> list:
    """Complex scalar/vector/matrix to nested [re, im] pairs."""
    a = np.asarray(z, dtype=complex)
    if a.ndim == 0:
        return [float(a.real), float(a.imag)]
    return [_pairs(row) for row in a]


def _reals(a) -> list:
    a = np.asarray(a, dtype=float)
    if a.ndim == 0:
        return float(a)
    return [_reals(row) for row in a]


def _header(seed=None, tol=None) -> dict:
    h = {"schema": SCHEMA_VERSION}
    h.update(CONVENTIONS)
    if seed is not None:
        h["seed"] = int(seed)
    if tol is not None:
        h["tol"] = float(tol)
    return h


def _emit(payload: dict, fmt: str, text_renderer) -> None:
    if fmt == "json":
        sys.stdout.write(_jdump(payload) + "\n")
    else:
        text_renderer(payload)


def _print_matrix_c(name: str, m: np.ndarray) -> None:
    print(f"{name} =")
    for row in m:
        cells = "  ".join(f"{z.real:+.12g}{z.imag:+.12g}j" for z in row)
        print(f"    [{cells}]")


def _print_matrix_r(name: str, m: np.ndarray) -> None:
    print(f"{name} =")
    for row in m:
        print("    [" + "  ".join(f"{x:+.12g}" for x in row) + "]")


# ---------------------------------------------------------------------------
# Commands


def _cmd_gamma(args) -> int:
    gammas = [gamma(mu) for mu in range(4)]
    table = np.zeros((4, 4))
    eye = np.eye(4)
    for mu in range(4):
        for nu in range(4):
            table[mu, nu] = np.max(
                np.abs(gammas[mu] @ gammas[nu] + gammas[nu] @ gammas[mu] - 2 * ETA[mu, nu] * eye)
            )
    payload = {
        "header": _header(),
        **{f"gamma{mu}": _pairs(gammas[mu]) for mu in range(4)},
        "eta": _reals(ETA),
        "relation_residuals": _reals(table),
        "relation_residual": float(np.max(table)),
    }

    def render(p):
        print("conventions:", p["header"]["clifford_anticommutator"])
        for mu in range(4):
            _print_matrix_c(f"gamma{mu}", gammas[mu])
        _print_matrix_r("eta", ETA)
        print(f"max anticommutation residual: {_g17(p['relation_residual'])}")

    _emit(payload, args.format, render)
    return 0


def _cmd_lorentz(args) -> int:
    e = args.entries
    mat = [[complex(e[0], e[1]), complex(e[2], e[3])], [complex(e[4], e[5]), complex(e[6], e[7])]]
    A = SL2Element(mat)
    lam = lorentz_of(A).mat
    eta_defect = float(np.max(np.abs(lam.T @ ETA @ lam - ETA)))
    payload = {
        "header": _header(),
        "sl2": _pairs(np.asarray(mat)),
        "lorentz": _reals(lam),
        "eta_defect": eta_defect,
        "det_defect": float(abs(np.linalg.det(lam) - 1.0)),
    }

    def render(p):
        _print_matrix_r("lorentz", lam)
        print(f"eta defect: {_g17(p['eta_defect'])}   det defect: {_g17(p['det_defect'])}")

    _emit(payload, args.format, render)
    return 0


def _cmd_verify(args) -> int:
    corrupt = None
    if args.corrupt_gamma:
        parts = args.corrupt_gamma.split(",")
        if len(parts) != 3:
            raise ValueError("--corrupt-gamma expects MU,I,J")
        corrupt = tuple(int(x) for x in parts)
    report = run_verification(seed=args.seed, samples=args.samples, corrupt_gamma=corrupt)
    payload = {
        "header": _header(seed=args.seed),
        "samples": report.samples,
        "checks": [
            {
                "name": c.name,
                "samples": c.samples,
                "max_defect": c.max_defect,
                "tol": c.tol,
                "passed": c.passed,
                "detail": c.detail,
            }
            for c in report.checks
        ],
        "passed": report.passed,
    }

    def render(p):
        print("conventions in force:")
        for key in ("clifford_anticommutator", "planewave_phase", "basis_order", "epsilon_normalization"):
            print(f"    {key} = {CONVENTIONS[key]}")
        for c in report.checks:
            flag = "PASS" if c.passed else "FAIL"
            line = (
                f"[{flag}] {c.name:<45} samples={c.samples:<6}"
                f" max_defect={c.max_defect:.3e} tol={c.tol:.0e}"
            )
            if c.detail:
                line += f"  ({c.detail})"
            print(line)
        print("overall:", "PASS" if report.passed else "FAIL")

    _emit(payload, args.format, render)
    return 0 if report.passed else 1


def _solve_payload(m: float, p1: float, p2: float, p3: float, tol: float) -> dict:
    q = shell_point(m, p1, p2, p3)
    A = boost_rep(q)
    t = tau(A)
    solutions = []
    for v in rest_fiber_basis():
        psi = FourSpinor.from_vec(t @ v.vec)
        solutions.append(
            {
                "psi": _pairs(psi.vec),
                "residual": fiber_residual(q, psi),
                "ok": fiber_residual(q, psi) <= tol * max(1.0, m) * psi.norm(),
            }
        )
    return {
        "header": _header(tol=tol),
        "mass": float(m),
        "momentum": _reals(q.p.coords),
        "boost": _pairs(A.mat),
        "solutions": solutions,
    }


def _cmd_solve(args) -> int:
    payload = _solve_payload(args.mass, *args.p, tol=args.tol)

    def render(p):
        print("momentum:", " ".join(_g17(x) for x in p["momentum"]))
        for k, sol in enumerate(p["solutions"]):
            flat = ", ".join(f"{re:+.12g}{im:+.12g}j" for re, im in sol["psi"])
            print(f"solution {k}: [{flat}]  residual={_g17(sol['residual'])}")

    _emit(payload, args.format, render)
    return 0


def _cmd_planewave_check(args) -> int:
    q = shell_point(args.mass, *args.p)
    t = tau(boost_rep(q))
    v = rest_fiber_basis()[args.branch]
    psi = FourSpinor.from_vec(t @ v.vec)
    residual = planewave_residual(q, psi, args.point, args.step, analytic=args.analytic)
    payload = {
        "header": _header(tol=args.tol),
        "mass": float(args.mass),
        "momentum": _reals(q.p.coords),
        "point": _reals(np.asarray(args.point, dtype=float)),
        "step": float(args.step),
        "mode": "analytic" if args.analytic else "central-difference",
        "branch": args.branch,
        "residual": residual,
    }

    def render(p):
        print(
            f"mode={p['mode']} step={_g17(p['step'])} residual={_g17(p['residual'])}"
        )

    _emit(payload, args.format, render)
    return 0


def _parse_grid(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("--grid expects N:LO:HI")
    n = int(parts[0])
    lo, hi = float(parts[1]), float(parts[2])
    if n < 1:
        raise ValueError("grid must have at least one node per axis")
    return n, lo, hi


def field_records(m: float, grid: tuple[int, float, float], seed: int, tol: float,
                  rapidity: bool = False):
    """Header dict plus one record dict per fiber-basis vector per node.

    Nodes are the Cartesian cube of the axis values (C order); with
    rapidity=True the axis values are mapped through m*sinh before use so
    the grid is uniform in rapidity instead of momentum.
    """
    n, lo, hi = grid
    axis = np.linspace(lo, hi, n)
    if rapidity:
        axis = m * np.sinh(axis)
    header = _header(seed=seed, tol=tol)
    header.update(
        {
            "record": "header",
            "mass": float(m),
            "grid": {
                "kind": "rapidity" if rapidity else "cartesian",
                "nodes_per_axis": n,
                "lo": float(lo),
                "hi": float(hi),
            },
        }
    )

    def records():
        basis = rest_fiber_basis()
        for p1 in axis:
            for p2 in axis:
                for p3 in axis:
                    q = shell_point(m, float(p1), float(p2), float(p3))
                    A = boost_rep(q)
                    t = tau(A)
                    for k, v in enumerate(basis):
                        psi = FourSpinor.from_vec(t @ v.vec)
                        pair = split_conjugate_pair(AssociatedClassRep(A, v, m))
                        residual = fiber_residual(q, psi)
                        yield {
                            "record": "sample",
                            "p": _reals(q.p.coords),
                            "basis_index": k,
                            "psi": _pairs(psi.vec),
                            "s": _pairs(pair.s.vec),
                            "sbar": _pairs(pair.sbar.vec),
                            "residual": residual,
                            "ok": residual <= tol * max(1.0, m) * psi.norm(),
                        }

    return header, records()


def _cmd_sample_field(args) -> int:
    grid = _parse_grid(args.grid)
    header, records = field_records(
        args.mass, grid, seed=args.seed, tol=args.tol, rapidity=args.rapidity
    )
    try:
        out = open(args.out, "w", encoding="utf-8", newline="\n")
    except OSError as exc:
        print(f"cannot open output file {args.out!r}: {exc}", file=sys.stderr)
        return 1
    count = 0
    flagged = 0
    with out:
        out.write(_jdump(header) + "\n")
        for rec in records:
            out.write(_jdump(rec) + "\n")
            count += 1
            flagged += 0 if rec["ok"] else 1
    summary = {
        "header": _header(seed=args.seed, tol=args.tol),
        "out": args.out,
        "records": count,
        "flagged": flagged,
    }

    def render(p):
        print(f"wrote {count} records to {args.out} ({flagged} flagged)")

    _emit(summary, args.format, render)
    return 0


# ---------------------------------------------------------------------------
# Parser


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text",
                        help="output format (default: text)")
    common.add_argument("--seed", type=int, default=0, help="random seed")
    common.add_argument("--tol", type=float, default=1e-9,
                        help="fiber-residual tolerance (default: 1e-9)")

    parser = argparse.ArgumentParser(
        prog="twospinors",
        description="2-spinor algebra kernel: gamma matrices, the Lorentz "
        "covering, momentum-space Dirac solutions, and spinor-field sampling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", parents=[common],
                       help="emit the gamma matrices and their relation table")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("lorentz", parents=[common],
                       help="emit the Lorentz matrix covered by a 2x2 matrix")
    p.add_argument("entries", type=float, nargs=8,
                   metavar="E",
                   help="a11re a11im a12re a12im a21re a21im a22re a22im")
    p.set_defaults(func=_cmd_lorentz)

    p = sub.add_parser("verify", parents=[common],
                       help="run the verification sweeps")
    p.add_argument("--samples", type=int, default=1000,
                   help="samples per sweep (default: 1000)")
    p.add_argument("--corrupt-gamma", default=None, metavar="MU,I,J",
                   help=argparse.SUPPRESS)  # negative-control test hook
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("solve", parents=[common],
                       help="fiber basis of the momentum-space equation")
    p.add_argument("-m", "--mass", type=float, required=True)
    p.add_argument("p", type=float, nargs=3, metavar="P",
                   help="spatial momentum p1 p2 p3")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("planewave-check", parents=[common],
                       help="position-space residual by central differences")
    p.add_argument("-m", "--mass", type=float, required=True)
    p.add_argument("p", type=float, nargs=3, metavar="P",
                   help="spatial momentum p1 p2 p3")
    p.add_argument("--point", type=float, nargs=4, default=(0.0, 0.0, 0.0, 0.0),
                   metavar="X", help="evaluation point x0 x1 x2 x3")
    p.add_argument("--step", type=float, default=1e-3, help="difference step")
    p.add_argument("--branch", type=int, choices=(0, 1), default=0,
                   help="which fiber-basis vector to propagate")
    p.add_argument("--analytic", action="store_true",
                   help="differentiate the phase exactly instead")
    p.set_defaults(func=_cmd_planewave_check)

    p = sub.add_parser("sample-field", parents=[common],
                       help="sample the conjugate spinor fields over a momentum grid")
    p.add_argument("-m", "--mass", type=float, required=True)
    p.add_argument("--grid", default="5:-1:1", metavar="N:LO:HI",
                   help="nodes per axis and axis range (default: 5:-1:1)")
    p.add_argument("--rapidity", action="store_true",
                   help="axis values are rapidities, mapped through m*sinh")
    p.add_argument("--out", required=True, help="output file path")
    p.set_defaults(func=_cmd_sample_field)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _NUMERIC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
