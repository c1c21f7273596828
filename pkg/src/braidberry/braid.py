"""The 9x9 Hecke M-matrix and its Yang-Baxterization R(theta, phi1, phi2).

With ``x = exp(i theta)``, ``q1 = exp(i phi1)``, ``q2 = exp(i phi2)``::

    R = (b * 1 + a * M) / 3,    a = 1/x - x,    b = 2x + 1/x

``M`` is Hermitian with ``M^2 = M + 2`` and satisfies the braided Hecke
relation with ``g = 2``, so ``R`` is unitary and solves the Yang-Baxter
equation in multiplicative spectral-parameter form.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linalg import dagger, frobenius_norm, kron
from .su3 import CoupledSu3Set, coupled_sets

I9 = np.eye(9, dtype=np.complex128)
I3 = np.eye(3, dtype=np.complex128)

#: Nonzero entries of M as (row, col, p, r): the entry is ``q1**p * q2**r``.
M_MONOMIALS = (
    (0, 4, -2, 2), (0, 8, 0, 2),
    (1, 5, 0, 1), (1, 6, 1, 0),
    (2, 3, -1, 0), (2, 7, -1, 1),
    (3, 2, 1, 0), (3, 7, 0, 1),
    (4, 0, 2, -2), (4, 8, 2, 0),
    (5, 1, 0, -1), (5, 6, 1, -1),
    (6, 1, -1, 0), (6, 5, -1, 1),
    (7, 2, 1, -1), (7, 3, 0, -1),
    (8, 0, 0, -2), (8, 4, -2, 0),
)  # fmt: skip

_ROWS = np.array([m[0] for m in M_MONOMIALS])
_COLS = np.array([m[1] for m in M_MONOMIALS])
_P = np.array([m[2] for m in M_MONOMIALS], dtype=float)
_R = np.array([m[3] for m in M_MONOMIALS], dtype=float)

#: Invariant triples of composite basis indices, subsystems 1, 2, 3.
SUBSYSTEM_TRIPLES = {1: (0, 4, 8), 2: (1, 5, 6), 3: (2, 3, 7)}

#: Hecke constants (alpha, beta, g) fixed by the construction.
HECKE_ALPHA, HECKE_BETA, HECKE_G = 1.0, 2.0, 2.0


@dataclass(frozen=True)
class BraidParams:
    theta: float
    phi1: float = 0.0
    phi2: float = 0.0

    def __post_init__(self):
        if not all(np.isfinite([self.theta, self.phi1, self.phi2])):
            raise ValueError("braid parameters must be finite")

    @property
    def x(self) -> complex:
        return np.exp(1j * self.theta)

    @property
    def q1(self) -> complex:
        return np.exp(1j * self.phi1)

    @property
    def q2(self) -> complex:
        return np.exp(1j * self.phi2)


@dataclass(frozen=True)
class BaxterCoeffs:
    a: complex
    b: complex
    rho: complex
    G: complex


def baxter_coeffs(x: complex) -> BaxterCoeffs:
    """Coefficients of the Baxterized R for spectral parameter ``x``."""
    x = complex(x)
    den = 2 * x + 1 / x
    if abs(den) < 1e-12:
        raise DomainError(f"2x + 1/x vanishes at x = {x}")
    a = 1 / x - x
    return BaxterCoeffs(a=a, b=den, rho=den / 3, G=-(x - 1 / x) / den)


def m_phases(phi1, phi2) -> np.ndarray:
    """Phases ``p*phi1 + r*phi2`` of the 18 nonzero M entries.

    Broadcasts over array-valued angles; the entry axis is last.
    """
    phi1 = np.asarray(phi1, dtype=float)[..., None]
    phi2 = np.asarray(phi2, dtype=float)[..., None]
    return _P * phi1 + _R * phi2


def build_M(p: BraidParams) -> np.ndarray:
    m = np.zeros((9, 9), dtype=np.complex128)
    m[_ROWS, _COLS] = np.exp(1j * m_phases(p.phi1, p.phi2))
    return m


def build_M_stack(phi1, phi2, weights=None) -> np.ndarray:
    """M for arrays of angles, optionally scaling each entry by ``weights``.

    ``weights`` has one value per entry of :data:`M_MONOMIALS`; this is how
    the time derivative of M is formed.
    """
    vals = np.exp(1j * m_phases(phi1, phi2))
    if weights is not None:
        vals = vals * weights
    out = np.zeros(vals.shape[:-1] + (9, 9), dtype=np.complex128)
    out[..., _ROWS, _COLS] = vals
    return out


def build_M_su3(p: BraidParams, sets: tuple[CoupledSu3Set, ...] | None = None) -> np.ndarray:
    """M assembled from the ladder operators of the three coupled SU(3) sets."""
    s1, s2, s3 = sets if sets is not None else coupled_sets()
    q1, q2 = p.q1, p.q2
    L1, L2, L3 = s1.ladder, s2.ladder, s3.ladder
    m = (
        q2**2 / q1**2 * L1["I+"] + q1**2 / q2**2 * L1["I-"]
        + 1 / q2**2 * L1["V+"] + q2**2 * L1["V-"]
        + q1**2 * L1["U+"] + 1 / q1**2 * L1["U-"]
    )
    for L in (L2, L3):
        m = m + (
            q1 / q2 * L["I+"] + q2 / q1 * L["I-"]
            + q2 * L["V+"] + 1 / q2 * L["V-"]
            + 1 / q1 * L["U+"] + q1 * L["U-"]
        )
    return m


def r_from_m(theta: float, m: np.ndarray) -> np.ndarray:
    c = baxter_coeffs(np.exp(1j * theta))
    return (c.b * np.eye(m.shape[-1]) + c.a * m) / 3


def build_R(p: BraidParams) -> np.ndarray:
    return r_from_m(p.theta, build_M(p))


def hecke_residuals(m: np.ndarray) -> tuple[float, float]:
    """(braided relation residual on C^27, quadratic relation residual)."""
    m1 = kron(m, I3)
    m2 = kron(I3, m)
    braided = m1 @ m2 @ m1 + HECKE_G * m1 - m2 @ m1 @ m2 - HECKE_G * m2
    quad = m @ m - HECKE_ALPHA * m - HECKE_BETA * np.eye(m.shape[0])
    return frobenius_norm(braided), frobenius_norm(quad)


def check_hecke(p: BraidParams) -> tuple[float, float]:
    return hecke_residuals(build_M(p))


def ybe_residual(r_of_theta, theta1: float, theta2: float) -> float:
    """Frobenius residual of R1(x) R2(xy) R1(y) = R2(y) R1(xy) R2(x).

    ``r_of_theta`` maps a spectral angle to a 9x9 matrix.
    """
    rx, ry, rxy = r_of_theta(theta1), r_of_theta(theta2), r_of_theta(theta1 + theta2)
    lhs = kron(rx, I3) @ kron(I3, rxy) @ kron(ry, I3)
    rhs = kron(I3, ry) @ kron(rxy, I3) @ kron(I3, rx)
    return frobenius_norm(lhs - rhs)


def check_ybe(theta1: float, theta2: float, phi1: float = 0.0, phi2: float = 0.0) -> float:
    """YBE residual at fixed phases, varying only the spectral parameters."""
    m = build_M(BraidParams(0.0, phi1, phi2))
    return ybe_residual(lambda th: r_from_m(th, m), theta1, theta2)


def check_baxterization_functions(x: complex, y: complex) -> tuple[float, float, float]:
    """Residuals of the functional equations obeyed by G and rho.

    Returns, in order, the residuals of

    * ``G(x) + G(y) + G(x)G(y) - [1 + 2 G(x)G(y)] G(xy)``
    * ``G(x) + G(1/x) + G(x)G(1/x)``
    * ``rho(x) rho(1/x) [1 + 2 G(x)G(1/x)] - 1``
    """
    cx, cy, cxy = baxter_coeffs(x), baxter_coeffs(y), baxter_coeffs(x * y)
    ci = baxter_coeffs(1 / complex(x))
    gx, gy = cx.G, cy.G
    r1 = gx + gy + HECKE_ALPHA * gx * gy - (1 + HECKE_G * gx * gy) * cxy.G
    r2 = gx + ci.G + HECKE_ALPHA * gx * ci.G
    r3 = cx.rho * ci.rho * (1 + HECKE_BETA * gx * ci.G) - 1
    return abs(r1), abs(r2), abs(r3)


def local_gauge_P(phi1: float, phi2: float) -> np.ndarray:
    """Single-site gauge ``diag(q1/q2, 1, q1)`` that removes the phases."""
    q1, q2 = np.exp(1j * phi1), np.exp(1j * phi2)
    return np.diag([q1 / q2, 1.0, q1]).astype(np.complex128)


def gauge_transform(p: BraidParams) -> np.ndarray:
    """``(P x P) R(theta, phi1, phi2) (P^-1 x P^-1)``; equals ``R(theta, 0, 0)``."""
    P = local_gauge_P(p.phi1, p.phi2)
    PP = kron(P, P)
    return PP @ build_R(p) @ dagger(PP)


def block_mask() -> np.ndarray:
    """Boolean 9x9 mask of entries inside the three invariant blocks."""
    mask = np.zeros((9, 9), dtype=bool)
    for idx in SUBSYSTEM_TRIPLES.values():
        mask[np.ix_(idx, idx)] = True
    return mask


def off_block_leakage(a: np.ndarray) -> float:
    """Largest modulus among entries outside the invariant blocks."""
    out = np.abs(np.asarray(a)[..., ~block_mask()])
    return float(out.max()) if out.size else 0.0
