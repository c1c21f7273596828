"""Command-line front end: ``braidberry {verify,entangle,berry,spectrum,decompose}``.

Every command emits a table (CSV or JSON) and exits 0 only if every row is
within tolerance.  Exit codes: 0 pass, 1 a check failed, 2 bad input,
3 output could not be written.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .berry import EXAMPLES, berry_closed, berry_numeric, example_phase, wrap_distance
from .braid import BraidParams
from .dynamics import BANDS, SIN_EPS, DriveParams, energies_closed, hamiltonian, numeric_spectrum
from .entanglement import generate_state, negativity, negativity_closed
from .errors import BraidBerryError
from .reduction import BLOCK_LAYOUT, block_diagonalize
from .su3 import su2_set
from .verify import SUITES, run_suites

DEFAULT_TOL = {
    "verify": 1e-9,
    "entangle": 1e-9,
    "berry": 1e-5,
    "spectrum": 1e-9,
    "decompose": 1e-10,
}
TOL_ENV = "BRAIDBERRY_TOL"

COLUMNS = {
    "verify": ["check", "samples", "max_residual", "passed"],
    "entangle": ["theta", "basis_index", "negativity_numeric", "negativity_closed", "abs_diff"],
    "berry": ["theta", "k", "band", "gamma_numeric", "gamma_closed", "wrap_distance", "T", "steps"],
    "spectrum": ["theta", "t", "k", "band", "energy_numeric", "energy_closed", "abs_diff"],
    "decompose": [
        "block", "label", "subsystem", "spin", "size",
        "casimir", "pp_t_residual", "leakage",
    ],
}


class UsageError(Exception):
    pass


def parse_grid(text: str) -> list[float]:
    """``start:stop:count`` -> ``count`` evenly spaced values, both ends included."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"theta grid must be start:stop:count, got {text!r}")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise UsageError(f"bad theta grid {text!r}: {exc}") from None
    if count < 1:
        raise UsageError("theta grid must contain at least one point")
    return [float(v) for v in np.linspace(start, stop, count)]


def resolve_tol(cfg) -> float:
    if cfg.tol is not None:
        return cfg.tol
    env = os.environ.get(TOL_ENV)
    if env:
        try:
            return float(env)
        except ValueError:
            raise UsageError(f"{TOL_ENV}={env!r} is not a number") from None
    return DEFAULT_TOL[cfg.command]


def thetas(cfg, default: list[float]) -> list[float]:
    if cfg.theta is not None and cfg.theta_grid is not None:
        raise UsageError("give --theta or --theta-grid, not both")
    if cfg.theta_grid is not None:
        vals = parse_grid(cfg.theta_grid)
    elif cfg.theta is not None:
        vals = [cfg.theta]
    else:
        vals = default
    if cfg.degrees:
        vals = [math.radians(v) for v in vals]
    return vals


def drive(cfg, theta: float) -> DriveParams:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        d = DriveParams.reduced(theta, cfg.n1, cfg.n2, cfg.omega)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return d


def sweep(fn, items, workers: int):
    """Map ``fn`` over ``items``; results come back in input order."""
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# --- commands --------------------------------------------------------------


def cmd_verify(cfg, tol):
    faults = set(cfg.inject_fault or [])
    results = run_suites(seed=cfg.seed, samples=cfg.samples, tol=tol, faults=faults)
    rows = [
        {"check": r.name, "samples": r.samples, "max_residual": r.max_residual, "passed": r.passed}
        for r in results
    ]
    for r in results:
        if not r.passed:
            print(f"FAIL {r.name}: residual {r.max_residual:.3e} > {tol:.1e}", file=sys.stderr)
    return rows, all(r.passed for r in results)


def cmd_entangle(cfg, tol):
    grid = thetas(cfg, [0.0, math.pi / 3, math.pi / 2])
    basis = range(9) if cfg.all_basis else [cfg.basis]

    def point(th):
        p = BraidParams(th, cfg.phi1, cfg.phi2)
        closed = float(negativity_closed(th))
        out = []
        for i in basis:
            num = negativity(generate_state(p, i))
            out.append({
                "theta": th, "basis_index": i, "negativity_numeric": num,
                "negativity_closed": closed, "abs_diff": abs(num - closed),
            })
        return out

    rows = [r for chunk in sweep(point, grid, cfg.workers) for r in chunk]
    return rows, all(r["abs_diff"] <= tol for r in rows)


def cmd_berry(cfg, tol):
    if cfg.example is not None:
        cfg.n1, cfg.n2 = EXAMPLES[cfg.example]
    grid = thetas(cfg, [math.pi / 3])
    for th in grid:
        if abs(math.sin(th)) < SIN_EPS:
            raise UsageError(f"theta = {th!r} has sin(theta) = 0: bands are degenerate there")

    def point(th):
        d = drive(cfg, th)
        out = []
        for k in (1, 2, 3):
            for band in BANDS:
                num = berry_numeric(d, k, band, steps=cfg.steps)
                if cfg.example is not None:
                    closed = example_phase(cfg.example, th, k, band)
                else:
                    closed = berry_closed(d, k, band).gamma
                out.append({
                    "theta": th, "k": k, "band": band, "gamma_numeric": num.gamma,
                    "gamma_closed": closed, "wrap_distance": wrap_distance(num.gamma, closed),
                    "T": num.period, "steps": num.steps,
                })
        return out

    rows = [r for chunk in sweep(point, grid, cfg.workers) for r in chunk]
    return rows, all(r["wrap_distance"] <= tol for r in rows)


def cmd_spectrum(cfg, tol):
    grid = thetas(cfg, [math.pi / 3])

    def point(th):
        d = drive(cfg, th)
        out = []
        for k in (1, 2, 3):
            num = numeric_spectrum(d, k, cfg.t)[::-1]  # descending: +, 0, -
            closed = energies_closed(d, k)
            for band, e in zip(BANDS, num):
                out.append({
                    "theta": th, "t": cfg.t, "k": k, "band": band,
                    "energy_numeric": float(e), "energy_closed": closed[band],
                    "abs_diff": abs(float(e) - closed[band]),
                })
        return out

    rows = [r for chunk in sweep(point, grid, cfg.workers) for r in chunk]
    return rows, all(r["abs_diff"] <= tol for r in rows)


def cmd_decompose(cfg, tol):
    if cfg.n1 != cfg.n2:
        raise UsageError("decompose needs phi1 = phi2, i.e. --n1 equal to --n2")
    th = thetas(cfg, [math.pi / 3])[0]
    d = drive(cfg, th)
    dec = block_diagonalize(hamiltonian(d, cfg.t), tol=math.inf)
    rows, cas_err = [], 0.0
    for i, b in enumerate(BLOCK_LAYOUT):
        idx = list(b.indices)
        J = dec.P @ su2_set(b.subsystem).casimir @ dec.P.T
        w = np.linalg.eigvalsh(J[np.ix_(idx, idx)])
        cas_err = max(cas_err, float(np.abs(w - b.spin * (b.spin + 1)).max()))
        rows.append({
            "block": i, "label": b.label, "subsystem": b.subsystem, "spin": b.spin,
            "size": len(idx), "casimir": float(w.mean()),
            "pp_t_residual": dec.orthogonality_residual, "leakage": dec.leakage,
        })
    ok = (
        dec.sizes == (2, 1, 1, 2, 1, 2)
        and dec.leakage <= tol
        and dec.orthogonality_residual <= tol
        and cas_err <= tol
    )
    return rows, ok


COMMANDS = {
    "verify": cmd_verify,
    "entangle": cmd_entangle,
    "berry": cmd_berry,
    "spectrum": cmd_spectrum,
    "decompose": cmd_decompose,
}


# --- output ----------------------------------------------------------------


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "%.17g" % v
    return str(v)


def render_csv(command: str, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS[command])
    for r in rows:
        w.writerow([_cell(r[c]) for c in COLUMNS[command]])
    return buf.getvalue()


def render_json(command: str, rows, tol: float, ok: bool, cfg) -> str:
    doc = {
        "command": command,
        "version": __version__,
        "status": "PASS" if ok else "FAIL",
        "tolerance": tol,
        "seed": cfg.seed,
        "columns": COLUMNS[command],
        "rows": rows,
    }
    return json.dumps(doc, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theta", type=float, help="single angle (radians unless --degrees)")
    common.add_argument("--theta-grid", metavar="START:STOP:COUNT", help="inclusive linear grid")
    common.add_argument("--degrees", action="store_true", help="read angles in degrees")
    common.add_argument("--n1", type=int, default=1)
    common.add_argument("--n2", type=int, default=1)
    common.add_argument("--omega", type=float, default=1.0)
    common.add_argument("--phi1", type=float, default=0.0, help="fixed phase for entangle")
    common.add_argument("--phi2", type=float, default=0.0, help="fixed phase for entangle")
    common.add_argument("--t", type=float, default=0.0, help="time for spectrum/decompose")
    common.add_argument("--steps", type=int, default=4096, help="Berry loop discretization")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--samples", type=int, default=20, help="random samples per suite")
    common.add_argument("--example", type=int, choices=sorted(EXAMPLES))
    common.add_argument("--basis", type=int, default=0, choices=range(9), metavar="0..8")
    common.add_argument("--all-basis", action="store_true", help="entangle: all nine columns")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="PATH", help="write here instead of stdout")
    common.add_argument("--tol", type=float, help=f"override tolerance (also ${TOL_ENV})")
    common.add_argument("--workers", type=int, default=1, help="threads for grid sweeps")
    common.add_argument("--inject-fault", action="append", choices=sorted(SUITES),
                        help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="braidberry", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "verify": "Hecke, Yang-Baxter, unitarity, gauge and algebra suites",
        "entangle": "negativity of R-generated states vs closed form",
        "berry": "numeric vs closed-form Berry phases",
        "spectrum": "subsystem eigenvalues vs closed form",
        "decompose": "spin-1/2 / spin-0 block decomposition at phi1 = phi2",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    cfg = parser.parse_args(argv)
    try:
        if cfg.steps < 64:
            raise UsageError("--steps must be at least 64")
        tol = resolve_tol(cfg)
        rows, ok = COMMANDS[cfg.command](cfg, tol)
    except (UsageError, BraidBerryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.format == "csv":
        text = render_csv(cfg.command, rows)
    else:
        text = render_json(cfg.command, rows, tol, ok, cfg)
    try:
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 3
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
