"""Berry phases of the three subsystems, numeric and closed form.

The numeric route samples one period on a uniform grid, follows a band by
maximal-overlap continuation and evaluates the gauge-invariant discrete
product ``-Im sum_j ln <psi_j|psi_{j+1}>`` with ``psi_N = psi_0``.  Its error
is second order in the step size.

All phases are reported in ``(-pi, pi]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import (
    BANDS,
    SIN_EPS,
    DriveParams,
    closed_eigensystem,
    energies_closed,
    hamiltonian_block,
    normalizations,
    period,
)
from .errors import DomainError, StepCountError
from .linalg import herm_eig

TWO_PI = 2 * math.pi

#: (n1, n2) of the four worked examples.
EXAMPLES = {1: (1, 1), 2: (-1, 1), 3: (2, 1), 4: (-2, 1)}

MIN_STEPS = 64
MIN_OVERLAP = 0.9


def canonical_phase(gamma: float) -> float:
    """Reduce an angle to ``(-pi, pi]``."""
    g = math.remainder(float(gamma), TWO_PI)
    return math.pi if g == -math.pi else g + 0.0


def wrap_distance(a: float, b: float) -> float:
    """Distance between two angles on the circle."""
    return abs(canonical_phase(a - b))


@dataclass(frozen=True)
class BerryResult:
    subsystem: int
    band: str
    gamma: float
    method: str  # 'numeric' or 'closed'
    period: float
    steps: int | None = None


def _check(d: DriveParams, k: int, band: str) -> None:
    if k not in (1, 2, 3):
        raise ValueError(f"subsystem must be 1, 2 or 3, got {k!r}")
    if band not in BANDS:
        raise ValueError(f"band must be one of {BANDS}, got {band!r}")
    if abs(math.sin(d.theta)) < SIN_EPS:
        raise DomainError("Berry phase undefined at sin(theta) = 0 (degenerate bands)")


def track_band(vectors: np.ndarray, start: int) -> np.ndarray:
    """Follow one eigenvector column through a stack of eigenbases.

    ``vectors`` has shape ``(N, dim, dim)`` with eigenvectors in columns.
    Returns the ``(N, dim)`` sequence chosen by maximal overlap with the
    previous step.
    """
    overlaps = np.abs(np.einsum("jai,jab->jib", vectors[:-1].conj(), vectors[1:]))
    best = overlaps.argmax(axis=2)
    best_val = overlaps.max(axis=2)
    n = vectors.shape[0]
    cols = np.empty(n, dtype=int)
    cols[0] = c = start
    for j in range(n - 1):
        if best_val[j, c] < MIN_OVERLAP:
            raise StepCountError(
                f"band overlap {best_val[j, c]:.3f} < {MIN_OVERLAP} at step {j}; refine the grid"
            )
        c = best[j, c]
        cols[j + 1] = c
    return vectors[np.arange(n), :, cols]


def discrete_berry_phase(states: np.ndarray) -> float:
    """``-Im ln prod_j <psi_j|psi_{j+1}>`` around the closed loop ``states``."""
    closed = np.concatenate([states, states[:1]])
    ov = np.einsum("ja,ja->j", closed[:-1].conj(), closed[1:])
    return -float(np.sum(np.angle(ov)))


def berry_numeric(d: DriveParams, k: int, band: str, steps: int = 4096) -> BerryResult:
    _check(d, k, band)
    if steps < MIN_STEPS:
        raise ValueError(f"steps must be at least {MIN_STEPS}")
    T = period(d, k)
    ts = np.arange(steps) * (T / steps)
    w, v = herm_eig(hamiltonian_block(d, k, ts))
    target = energies_closed(d, k)[band]
    start = int(np.argmin(np.abs(w[0] - target)))
    gaps = np.diff(np.sort(w[0]))
    if gaps.min() < 1e-9 * max(1.0, np.abs(w[0]).max()):
        raise DomainError("degenerate bands at t = 0")
    psi = track_band(v, start)
    return BerryResult(k, band, canonical_phase(discrete_berry_phase(psi)), "numeric", T, steps)


# --- closed forms ----------------------------------------------------------


def _k_terms(d: DriveParams):
    n1, n2, n = d.n1, d.n2, d.n
    st = math.sin(d.theta)
    s2 = math.sqrt(2)
    K1 = (
        -10 * n1**5 + 13 * n1**4 * n2 + 11 * n1**3 * n2**2 - 82 * n1**2 * n2**3
        + 94 * n1 * n2**4 - 52 * n2**5 - 8 * math.cos(2 * d.theta) * (n1 - 2 * n2) * n**4
    )
    K2 = -6 * s2 * st * n * n2 * (n1**3 - 9 * n1**2 * n2 + 12 * n1 * n2**2 - 8 * n2**3)
    K3 = (
        2 * n**2 * (9 * n1**2 * (n1 - n2) - 8 * st**2 * (n1**3 + n2**3))
        - 9 * n2 * (n1**4 - n1**3 * n2 + 5 * n1**2 * n2**2 - 3 * n1 * n2**3 + 2 * n2**4)
    )
    K4 = 6 * s2 * st * n * n2 * (n1**3 + 6 * n1**2 * n2 - 3 * n1 * n2**2 + 4 * n2**3)
    return K1, K2, K3, K4


def berry_closed_raw(d: DriveParams, k: int, band: str, swap_minus_norm: bool = False) -> float:
    """General closed-form Berry phase before reduction mod 2 pi.

    ``swap_minus_norm`` makes the ``-`` band of subsystem 1 divide by the
    subsystem-2 normalization instead of its own.  That reading is wrong (the
    numeric route rules it out) and is kept only to show the difference.
    """
    _check(d, k, band)
    n1, n2, n = d.n1, d.n2, d.n
    K1, K2, K3, K4 = _k_terms(d)
    # 2 omega T^(1) and omega T^(2,3) both equal 2 pi for every omega.
    wT = TWO_PI
    if k == 1:
        N = normalizations(d, 1)
        if band == "+":
            return (K1 + K2) / N["+"] * wT
        if band == "0":
            return -n1 * n2 * (n1 + n2) / (2 * n**2) * wT
        den = normalizations(d, 2)["-"] if swap_minus_norm else N["-"]
        return (K1 - K2) / den * wT
    N = normalizations(d, k)
    if band == "+":
        return (K3 + K4) / N["+"] * wT
    if band == "0":
        return -n2 * (n1 - n2) * (n1 - 2 * n2) / (2 * n**2) * wT
    return (K3 - K4) / N["-"] * wT


def berry_closed(d: DriveParams, k: int, band: str) -> BerryResult:
    T = (math.pi if k == 1 else TWO_PI) / d.omega
    return BerryResult(k, band, canonical_phase(berry_closed_raw(d, k, band)), "closed", T)


def example_phase(example: int, theta: float, k: int, band: str) -> float:
    """Berry phase from the worked-example formulas, reduced to ``(-pi, pi]``.

    Example 1 is ``phi1 = phi2``; examples 2-4 are ``(n1, n2) = (-1, 1)``,
    ``(2, 1)`` and ``(-2, 1)``.
    """
    if example not in EXAMPLES:
        raise ValueError(f"example must be 1..4, got {example!r}")
    _check(DriveParams(theta, *EXAMPLES[example]), k, band)
    st = math.sin(theta)
    sign = {"+": 1, "0": 0, "-": -1}[band]
    if example == 1:
        g = -sign * math.pi * (1 - 2 * math.sqrt(2) / 3 * st)
    elif example in (2, 3):
        g = sign * math.sqrt(6) * st / 3 * TWO_PI
    elif k == 1:
        g = -TWO_PI / 7 if sign == 0 else (4 / 7 + sign * math.sqrt(14) / 3 * st) * TWO_PI
    else:
        g = TWO_PI / 7 if sign == 0 else -(4 / 7 - sign * math.sqrt(14) / 3 * st) * TWO_PI
    return canonical_phase(g)


def connection_integral(d: DriveParams, k: int, band: str, steps: int = 2048) -> float:
    """``i int_0^T <E|dE/dt> dt`` for the closed-form eigenvector gauge.

    The time derivative uses central differences of the closed-form vectors
    and the integral the periodic trapezoidal rule.  The result is *not*
    reduced mod 2 pi.
    """
    _check(d, k, band)
    T = (math.pi if k == 1 else TWO_PI) / d.omega
    h = T / steps
    eps = 1e-5 * T
    total = 0.0
    for j in range(steps):
        t = j * h
        v = closed_eigensystem(d, k, t)[1][band]
        vp = closed_eigensystem(d, k, t + eps)[1][band]
        vm = closed_eigensystem(d, k, t - eps)[1][band]
        total += float(np.real(1j * np.vdot(v, (vp - vm) / (2 * eps))))
    return total * h
