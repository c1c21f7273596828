"""Randomized algebraic check suites over the braid and SU(3)/SU(2) layers.

Each suite draws its samples from a seeded generator and returns the largest
residual it saw.  ``fault=True`` perturbs the object under test so the
failure path can be exercised.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .braid import (
    BraidParams,
    build_M,
    build_M_su3,
    build_R,
    check_baxterization_functions,
    gauge_transform,
    hecke_residuals,
    r_from_m,
    ybe_residual,
)
from .linalg import commutator, dagger, frobenius_norm
from .su3 import coupled_set, gell_mann, structure_constants, su2_set

FAULT = 1e-3

#: Eigenvalues of every SU(2) Casimir: spin-1/2 twice, spin-0 seven times.
CASIMIR_SPECTRUM = np.array([0.0] * 7 + [0.75] * 2)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    samples: int
    max_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.max_residual <= self.tol)


def _angles(rng: np.random.Generator, n: int, k: int) -> np.ndarray:
    return rng.uniform(-math.pi, math.pi, size=(n, k))


def _spoil(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    a[0, -1] += FAULT
    return a


def suite_hecke(rng, samples, fault=False) -> float:
    worst = 0.0
    for p1, p2 in _angles(rng, samples, 2):
        m = build_M(BraidParams(0.0, p1, p2))
        if fault:
            m = _spoil(m)
        worst = max(worst, *hecke_residuals(m))
    return worst


def suite_ybe(rng, samples, fault=False) -> float:
    worst = 0.0
    for t1, t2, p1, p2 in _angles(rng, samples, 4):
        m = build_M(BraidParams(0.0, p1, p2))
        if fault:
            m = _spoil(m)
        worst = max(worst, ybe_residual(lambda th: r_from_m(th, m), t1, t2))
    return worst


def suite_unitarity(rng, samples, fault=False) -> float:
    """``R^dagger R = 1`` and ``R^dagger(theta) = R(-theta)``."""
    worst = 0.0
    for th, p1, p2 in _angles(rng, samples, 3):
        r = build_R(BraidParams(th, p1, p2))
        if fault:
            r = _spoil(r)
        inverse = build_R(BraidParams(-th, p1, p2))
        worst = max(
            worst,
            frobenius_norm(dagger(r) @ r - np.eye(9)),
            frobenius_norm(dagger(r) - inverse),
        )
    return worst


def suite_gauge(rng, samples, fault=False) -> float:
    worst = 0.0
    for th, p1, p2 in _angles(rng, samples, 3):
        g = gauge_transform(BraidParams(th, p1, p2))
        if fault:
            g = _spoil(g)
        worst = max(worst, frobenius_norm(g - build_R(BraidParams(th))))
    return worst


def suite_baxterization(rng, samples, fault=False) -> float:
    worst = 0.0
    for t1, t2 in _angles(rng, samples, 2):
        res = check_baxterization_functions(np.exp(1j * t1), np.exp(1j * t2))
        worst = max(worst, *res)
    return worst + (FAULT if fault else 0.0)


def suite_m_from_su3(rng, samples, fault=False) -> float:
    worst = 0.0
    for p1, p2 in _angles(rng, samples, 2):
        p = BraidParams(0.0, p1, p2)
        m = build_M_su3(p)
        if fault:
            m = _spoil(m)
        worst = max(worst, frobenius_norm(m - build_M(p)))
    return worst


def _su3_residual(gens, f) -> float:
    worst = 0.0
    for a in range(8):
        for b in range(8):
            rhs = 1j * np.einsum("n,nij->ij", f[a, b], np.asarray(gens))
            worst = max(worst, frobenius_norm(commutator(gens[a], gens[b]) - rhs))
    return worst


def suite_su3_commutators(rng, samples, fault=False) -> float:
    """Exhaustive; the sample count is ignored."""
    f = structure_constants()
    families = [gell_mann().I] + [coupled_set(k).I for k in (1, 2, 3)]
    worst = 0.0
    for gens in families:
        gens = list(gens)
        if fault:
            gens[0] = _spoil(gens[0])
        worst = max(worst, _su3_residual(gens, f))
    return worst


def suite_su2_commutators(rng, samples, fault=False) -> float:
    worst = 0.0
    for k in (1, 2, 3):
        s = su2_set(k)
        sp = _spoil(s.plus) if fault else s.plus
        worst = max(
            worst,
            frobenius_norm(commutator(sp, s.minus) - 2 * s.S3),
            frobenius_norm(commutator(s.S3, sp) - sp),
            frobenius_norm(commutator(s.S3, s.minus) + s.minus),
        )
    return worst


def suite_casimir(rng, samples, fault=False) -> float:
    worst = 0.0
    for k in (1, 2, 3):
        s = su2_set(k)
        J = s.casimir + (FAULT * np.eye(9) if fault else 0)
        w = np.linalg.eigvalsh(J)
        worst = max(worst, float(np.abs(np.sort(w) - CASIMIR_SPECTRUM).max()))
        for op in (s.plus, s.minus, s.S3):
            worst = max(worst, frobenius_norm(commutator(J, op)))
    return worst


SUITES: dict[str, Callable] = {
    "hecke": suite_hecke,
    "ybe": suite_ybe,
    "unitarity": suite_unitarity,
    "gauge": suite_gauge,
    "baxterization": suite_baxterization,
    "m_from_su3": suite_m_from_su3,
    "su3_commutators": suite_su3_commutators,
    "su2_commutators": suite_su2_commutators,
    "casimir": suite_casimir,
}


def run_suites(
    seed: int = 42, samples: int = 20, tol: float = 1e-9,
    faults: frozenset | set = frozenset(), names=None,
) -> list[SuiteResult]:
    """Run the named suites (all by default) in a fixed order.

    Every suite gets its own generator derived from ``seed`` so that results
    do not depend on which other suites ran.
    """
    names = list(SUITES) if names is None else list(names)
    unknown = set(names) - set(SUITES) | set(faults) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suite(s): {sorted(unknown)}")
    if samples < 1:
        raise ValueError("samples must be positive")
    seeds = np.random.SeedSequence(seed).spawn(len(SUITES))
    out = []
    for i, name in enumerate(SUITES):
        if name not in names:
            continue
        rng = np.random.default_rng(seeds[i])
        res = SUITES[name](rng, samples, fault=name in faults)
        out.append(SuiteResult(name, samples, float(res), tol))
    return out
