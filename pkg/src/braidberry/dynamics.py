"""Hamiltonian of the driven Yang-Baxter system and its closed-form eigensystem.

The phases are driven linearly, ``phi_i = n_i * omega * t``, with ``theta``
held fixed.  The Hamiltonian is ``H = i hbar (dR/dt) R^dagger``; because every
entry of M is a monomial ``q1^p q2^r`` its time derivative is exact:
``d/dt entry = i (p n1 + r n2) omega * entry``.

``H`` splits into three 3x3 blocks on the triples of
:data:`braidberry.braid.SUBSYSTEM_TRIPLES`.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .braid import (
    M_MONOMIALS,
    SUBSYSTEM_TRIPLES,
    baxter_coeffs,
    build_M_stack,
    off_block_leakage,
)
from .errors import DomainError, InconsistencyError, ParameterError, StructureError
from .linalg import dagger, herm_eig
from .su3 import CoupledSu3Set, coupled_set

SQRT2 = np.sqrt(2.0)
SQRT6 = np.sqrt(6.0)

BANDS = ("+", "0", "-")

#: sin(theta) below this is treated as the degenerate point.
SIN_EPS = 1e-12


@dataclass(frozen=True)
class DriveParams:
    """Control parameters ``phi_i(t) = n_i * omega * t``.

    ``(n1, n2)`` must be nonzero and coprime; use :meth:`reduced` to bring an
    arbitrary pair to lowest terms.
    """

    theta: float
    n1: int = 1
    n2: int = 1
    omega: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if int(self.n1) != self.n1 or int(self.n2) != self.n2:
            raise ParameterError("n1 and n2 must be integers")
        if self.n1 == 0 or self.n2 == 0:
            raise ParameterError("n1 and n2 must be nonzero")
        if math.gcd(int(self.n1), int(self.n2)) != 1:
            raise ParameterError(f"(n1, n2) = ({self.n1}, {self.n2}) is not in lowest terms")
        if not self.omega > 0:
            raise ParameterError("omega must be positive")
        if not self.hbar > 0:
            raise ParameterError("hbar must be positive")

    @classmethod
    def reduced(cls, theta, n1, n2, omega=1.0, hbar=1.0, warn=True) -> "DriveParams":
        n1, n2 = int(n1), int(n2)
        g = math.gcd(n1, n2)
        if g > 1:
            if warn:
                warnings.warn(f"(n1, n2) = ({n1}, {n2}) reduced to ({n1 // g}, {n2 // g})")
            n1, n2 = n1 // g, n2 // g
        return cls(theta, n1, n2, omega, hbar)

    @property
    def n(self) -> float:
        """``sqrt(n1^2 - n1 n2 + n2^2)``."""
        return math.sqrt(self.n1**2 - self.n1 * self.n2 + self.n2**2)

    def phases(self, t):
        t = np.asarray(t, dtype=float)
        return self.n1 * self.omega * t, self.n2 * self.omega * t

    def with_theta(self, theta: float) -> "DriveParams":
        return DriveParams(theta, self.n1, self.n2, self.omega, self.hbar)


def _check_subsystem(k: int) -> None:
    if k not in (1, 2, 3):
        raise ValueError(f"subsystem must be 1, 2 or 3, got {k!r}")


def _rates(d: DriveParams) -> np.ndarray:
    return np.array([1j * (p * d.n1 + r * d.n2) * d.omega for _, _, p, r in M_MONOMIALS])


def r_matrix(d: DriveParams, t) -> np.ndarray:
    """R(theta, phi1(t), phi2(t)); ``t`` may be an array (stacked output)."""
    c = baxter_coeffs(np.exp(1j * d.theta))
    p1, p2 = d.phases(t)
    return (c.b * np.eye(9) + c.a * build_M_stack(p1, p2)) / 3


def r_matrix_dot(d: DriveParams, t) -> np.ndarray:
    """Exact time derivative of :func:`r_matrix`."""
    c = baxter_coeffs(np.exp(1j * d.theta))
    p1, p2 = d.phases(t)
    return c.a * build_M_stack(p1, p2, weights=_rates(d)) / 3


def hamiltonian(d: DriveParams, t) -> np.ndarray:
    """``i hbar (dR/dt) R^dagger`` at time(s) ``t``."""
    return 1j * d.hbar * r_matrix_dot(d, t) @ dagger(r_matrix(d, t))


def subsystem_block(H: np.ndarray, k: int, tol: float = 1e-9) -> np.ndarray:
    """3x3 restriction of ``H`` (or a stack of them) to subsystem ``k``."""
    _check_subsystem(k)
    leak = off_block_leakage(H)
    if leak > tol:
        raise StructureError(f"off-block leakage {leak:.3e} exceeds {tol:.1e}")
    idx = SUBSYSTEM_TRIPLES[k]
    return H[..., idx, :][..., :, idx]


def hamiltonian_block(d: DriveParams, k: int, t) -> np.ndarray:
    return subsystem_block(hamiltonian(d, t), k)


def energy_scale(d: DriveParams, k: int) -> float:
    """Prefactor ``C(k)`` of the SU(3) expansion."""
    _check_subsystem(k)
    f = 8.0 if k == 1 else 4.0
    return -f * SQRT2 * d.hbar * d.omega * math.sin(d.theta) / 3


def energies_closed(d: DriveParams, k: int) -> dict[str, float]:
    """Band energies keyed by ``'+'``, ``'0'``, ``'-'``."""
    _check_subsystem(k)
    f = 4.0 if k == 1 else 2.0
    e = f * SQRT2 / 3 * d.hbar * d.n * d.omega * math.sin(d.theta)
    return {"+": e, "0": 0.0, "-": -e}


# --- SU(3) expansion -------------------------------------------------------


def su3_expansion(
    H_k: np.ndarray, k: int, d: DriveParams, coupled: CoupledSu3Set | None = None,
    tol: float = 1e-9,
) -> np.ndarray:
    """Coefficients ``B_1..B_8`` with ``H^(k) = C(k) sum_l B_l I_l^(k)``.

    ``H_k`` is the 3x3 block.  The coefficients solve the normal equations
    built from ``tr(I_l I_m)`` restricted to the block, so no normalization is
    assumed.  Raises :class:`InconsistencyError` if the expansion does not
    reconstruct ``H_k`` within ``tol``.
    """
    _check_subsystem(k)
    c = coupled if coupled is not None else coupled_set(k)
    idx = SUBSYSTEM_TRIPLES[k]
    gens = [g[np.ix_(idx, idx)] for g in c.I]
    gram = np.array([[np.trace(a @ b) for b in gens] for a in gens])
    C = energy_scale(d, k)
    if abs(C) < SIN_EPS:
        raise DomainError("C(k) vanishes at sin(theta) = 0")
    rhs = np.array([np.trace(H_k @ g) for g in gens]) / C
    B = np.linalg.solve(gram, rhs)
    rec = C * sum(b * g for b, g in zip(B, gens))
    err = float(np.linalg.norm(rec - H_k))
    if err > tol:
        raise InconsistencyError(f"SU(3) expansion residual {err:.3e}")
    if np.max(np.abs(B.imag)) > tol:
        raise InconsistencyError("expansion coefficients are not real")
    return B.real


def b_coefficients_closed(d: DriveParams, k: int, t: float) -> np.ndarray:
    """Closed-form ``B_1..B_8`` of subsystem ``k`` at time ``t``."""
    _check_subsystem(k)
    n1, n2 = d.n1, d.n2
    p1, p2 = (float(v) for v in d.phases(t))
    st, ct = math.sin(d.theta), math.cos(d.theta)
    s2, s6 = SQRT2, SQRT6
    sin, cos = math.sin, math.cos
    if k == 1:
        dd = 2 * (p1 - p2)
        return np.array([
            s2 / 2 * (n1 - n2) * ct * sin(dd) + s2 / 6 * (n1 + n2) * st * cos(dd),
            -s2 / 2 * (n1 - n2) * ct * cos(dd) + s2 / 6 * (n1 + n2) * st * sin(dd),
            -s2 / 2 * (n1 - n2) * st,
            s2 / 6 * n2 * st * cos(2 * p2) + s2 / 2 * n2 * ct * sin(2 * p2)
            - s2 / 3 * n1 * st * cos(2 * p2),
            -s2 / 6 * n2 * st * sin(2 * p2) + s2 / 2 * n2 * ct * cos(2 * p2)
            + s2 / 3 * n1 * st * sin(2 * p2),
            s2 / 6 * n1 * st * cos(2 * p1) + s2 / 2 * n1 * ct * sin(2 * p1)
            - s2 / 3 * n2 * st * cos(2 * p1),
            -s2 / 6 * n1 * st * sin(2 * p1) + s2 / 2 * n1 * ct * cos(2 * p1)
            + s2 / 3 * n2 * st * sin(2 * p1),
            s6 / 6 * (n1 + n2) * st,
        ])
    dd = p1 - p2
    return np.array([
        s2 / 2 * (n1 - n2) * sin(dd) * ct - s2 / 6 * (n1 + n2) * cos(dd) * st,
        s2 / 2 * (n1 - n2) * cos(dd) * ct + s2 / 6 * (n1 + n2) * sin(dd) * st,
        s2 / 2 * (n1 - n2) * st,
        -s2 / 6 * n2 * cos(p2) * st + s2 / 2 * n2 * sin(p2) * ct + s2 / 3 * n1 * cos(p2) * st,
        -s2 / 6 * n2 * sin(p2) * st - s2 / 2 * n2 * cos(p2) * ct + s2 / 3 * n1 * sin(p2) * st,
        -s2 / 6 * n1 * cos(p1) * st + s2 / 2 * n1 * sin(p1) * ct + s2 / 3 * n2 * cos(p1) * st,
        -s2 / 6 * n1 * sin(p1) * st - s2 / 2 * n1 * cos(p1) * ct + s2 / 3 * n2 * sin(p1) * st,
        -s6 / 6 * (n1 + n2) * st,
    ])


# --- closed-form eigensystem ----------------------------------------------


@dataclass(frozen=True)
class Shorthand:
    """Auxiliary scalars appearing in the closed-form eigenvectors."""

    n: float
    b: complex
    alpha_p: float
    alpha_m: float
    beta_p: complex
    beta_m: complex
    delta_p: float
    delta_m: float
    eta_p: complex
    eta_m: complex


def shorthand(d: DriveParams) -> Shorthand:
    n, n1, n2 = d.n, d.n1, d.n2
    st = math.sin(d.theta)
    b = baxter_coeffs(np.exp(1j * d.theta)).b
    bc = b.conjugate()
    return Shorthand(
        n=n,
        b=b,
        alpha_p=3 * n1 + 2 * SQRT2 * n * st,
        alpha_m=3 * n1 - 2 * SQRT2 * n * st,
        beta_p=3 * n1 + SQRT2 * 1j * bc * n,
        beta_m=3 * n1 - SQRT2 * 1j * bc * n,
        delta_p=3 * n2 + 2 * SQRT2 * n * st,
        delta_m=3 * n2 - 2 * SQRT2 * n * st,
        eta_p=3 * n2 + SQRT2 * 1j * b * n,
        eta_m=3 * n2 - SQRT2 * 1j * b * n,
    )


def normalizations(d: DriveParams, k: int) -> dict[str, float]:
    """Squared norms of the unnormalized closed-form eigenvectors."""
    _check_subsystem(k)
    n, n1, n2 = d.n, d.n1, d.n2
    st = math.sin(d.theta)
    if k == 1:
        u = 2 * SQRT2 * (n1 - 2 * n2) * n * st
        plus = 12 * n**2 * (6 * n**2 + u - 3 * n1**2)
        minus = 12 * n**2 * (6 * n**2 - u - 3 * n1**2)
    else:
        u = 2 * SQRT2 * (n1 + n2) * n * st
        plus = 12 * n**2 * (3 * n**2 - u + 3 * n1 * n2)
        minus = 12 * n**2 * (3 * n**2 + u + 3 * n1 * n2)
    return {"+": plus, "0": 2 * n**2, "-": minus}


def _raw_vectors(d: DriveParams, k: int, t: float) -> dict[str, np.ndarray]:
    s = shorthand(d)
    n1, n2, n, b = d.n1, d.n2, s.n, s.b
    p1, p2 = (float(v) for v in d.phases(t))
    e1, e2 = np.exp(1j * p1), np.exp(1j * p2)
    if k == 1:
        return {
            "+": np.array([
                ((n1 - 2 * n2) * s.alpha_p + 6 * n2**2) * e2**2,
                (n2 * s.beta_m + SQRT2 * 1j * b * n * n1) * e1**2,
                n1 * s.alpha_p - n2 * s.beta_p,
            ]),
            "0": np.array([-n1 * e2**2, n2 * e1**2, n1 - n2], dtype=complex),
            "-": np.array([
                ((n1 - 2 * n2) * s.alpha_m + 6 * n2**2) * e2**2,
                (n2 * s.beta_p - SQRT2 * 1j * b * n * n1) * e1**2,
                n1 * s.alpha_m - n2 * s.beta_m,
            ]),
        }
    e12 = np.exp(-1j * (p1 - p2))
    # components on (|01>, |12>, |20>) for k = 2 and (|10>, |21>, |02>) for k = 3
    vecs = {
        "+": np.array([
            (n1 * s.alpha_m + n2 * s.delta_m) * e2,
            n1 * s.alpha_m - n2 * s.beta_m.conjugate(),
            (n2 * s.delta_m - n1 * s.eta_p) * e12,
        ]),
        "0": np.array([(n2 - n1) * e2, n1, -n2 * e12], dtype=complex),
        "-": np.array([
            (n1 * s.alpha_p + n2 * s.delta_p) * e2,
            n1 * s.alpha_p - n2 * s.beta_p.conjugate(),
            (n2 * s.delta_p - n1 * s.eta_m) * e12,
        ]),
    }
    if k == 3:
        # triple order is (|02>, |10>, |21>)
        vecs = {band: v[[2, 0, 1]] for band, v in vecs.items()}
    return vecs


def closed_eigensystem(d: DriveParams, k: int, t: float):
    """Closed-form eigenpairs of the 3x3 block ``H^(k)(t)``.

    Returns ``(energies, vectors)``, both dicts keyed by band.  The vectors
    carry the smooth, single-valued gauge used to derive the closed-form
    Berry phases; components follow the order of the subsystem triple.
    """
    _check_subsystem(k)
    if abs(math.sin(d.theta)) < SIN_EPS:
        raise DomainError("spectrum is degenerate at sin(theta) = 0")
    norms = normalizations(d, k)
    bad = {band: v for band, v in norms.items() if not v > 1e-12}
    if bad:
        raise ParameterError(f"non-positive normalization(s) {bad} at {d}")
    raw = _raw_vectors(d, k, t)
    vecs = {band: raw[band] / math.sqrt(norms[band]) for band in BANDS}
    return energies_closed(d, k), vecs


# --- periods ---------------------------------------------------------------


def _block_frequencies(d: DriveParams, k: int) -> list[int]:
    """Integer multiples of omega present in the matrix elements of H^(k)."""
    n1, n2 = d.n1, d.n2
    if k == 1:
        return [2 * abs(n1 - n2), 2 * abs(n1), 2 * abs(n2)]
    return [abs(n1 - n2), abs(n1), abs(n2)]


def period(d: DriveParams, k: int, tol: float = 1e-9) -> float:
    """Period of ``H^(k)``: ``pi/omega`` for k = 1, ``2 pi/omega`` otherwise.

    The analytic value is verified numerically: ``H(T)`` must return to
    ``H(0)`` and no ``T/m`` for ``m`` up to the largest frequency present may.
    """
    _check_subsystem(k)
    T = (math.pi if k == 1 else 2 * math.pi) / d.omega
    h0 = hamiltonian_block(d, k, 0.0)
    scale = max(1.0, float(np.linalg.norm(h0)))
    if np.linalg.norm(hamiltonian_block(d, k, T) - h0) > tol * scale:
        raise InconsistencyError(f"H^({k}) does not return after T = {T}")
    fmax = max(_block_frequencies(d, k))
    base = 2 if k == 1 else 1
    for m in range(2, fmax // base + 1):
        if np.linalg.norm(hamiltonian_block(d, k, T / m) - h0) <= tol * scale:
            raise InconsistencyError(f"H^({k}) already returns at T/{m}")
    return T


def numeric_spectrum(d: DriveParams, k: int, t: float) -> np.ndarray:
    """Ascending eigenvalues of ``H^(k)(t)``."""
    return herm_eig(hamiltonian_block(d, k, t)).eigenvalues
