"""The phi1 = phi2 regime: SU(2) form of H, block diagonalization, oscillators.

With ``n1 = n2`` each subsystem Hamiltonian is a combination of one SU(2)
realization, and a constant real orthogonal matrix splits the two-qutrit
space into three spin-1/2 doublets and three spin-0 singlets.  For
subsystem 1 the doublet Hamiltonian is a spin in a field of fixed polar
angle ``alpha`` (``cos alpha = (2 sqrt2 / 3) sin theta``) precessing in
azimuth ``beta``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .braid import SUBSYSTEM_TRIPLES, baxter_coeffs
from .dynamics import SIN_EPS, DriveParams, energy_scale, hamiltonian
from .errors import DomainError, InconsistencyError, ParameterError, StructureError
from .linalg import basis_index
from .su3 import su2_set

_R2 = 1 / math.sqrt(2)


def _row(*terms) -> np.ndarray:
    v = np.zeros(9)
    for coef, label in terms:
        v[basis_index(int(label[0]), int(label[1]))] = coef
    return v


def mixed_block_transform() -> np.ndarray:
    """An orthogonal variant that pairs ``|02>`` with ``|10>`` and ``|21>``.

    Negative control only: ``|02>`` and ``|10>`` lie in different eigenspaces
    of subsystem 3, so this matrix leaves H leaking.  Use :func:`block_transform`.
    """
    return np.array([
        _row((_R2, "00"), (_R2, "11")),
        _row((1, "22")),
        _row((_R2, "00"), (-_R2, "11")),
        _row((1, "01")),
        _row((_R2, "12"), (_R2, "20")),
        _row((_R2, "12"), (-_R2, "20")),
        _row((1, "02")),
        _row((_R2, "10"), (_R2, "21")),
        _row((_R2, "10"), (-_R2, "21")),
    ])


def block_transform() -> np.ndarray:
    """Orthogonal P with ``P H P^T = diag(H1_half, H1_0, H2_0, H2_half, H3_0, H3_half)``.

    Within each doublet the first row is the ``S3 = +1/2`` state, so that the
    transformed raising operator is ``|first><second|``.
    """
    return np.array([
        _row((_R2, "00"), (_R2, "11")),
        _row((1, "22")),
        _row((_R2, "00"), (-_R2, "11")),
        _row((_R2, "12"), (-_R2, "20")),
        _row((_R2, "12"), (_R2, "20")),
        _row((1, "01")),
        _row((_R2, "02"), (-_R2, "21")),
        _row((_R2, "02"), (_R2, "21")),
        _row((1, "10")),
    ])


@dataclass(frozen=True)
class Block:
    label: str
    subsystem: int
    spin: float
    indices: tuple


#: Layout of ``P H P^T``, in order.
BLOCK_LAYOUT = (
    Block("H1_half", 1, 0.5, (0, 1)),
    Block("H1_0", 1, 0.0, (2,)),
    Block("H2_0", 2, 0.0, (3,)),
    Block("H2_half", 2, 0.5, (4, 5)),
    Block("H3_0", 3, 0.0, (6,)),
    Block("H3_half", 3, 0.5, (7, 8)),
)


def doublet(k: int) -> tuple[int, int]:
    return next(b.indices for b in BLOCK_LAYOUT if b.subsystem == k and b.spin == 0.5)


def expected_tilde_su2(k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Dyadic ``(S+, S-, S3)`` of set ``k`` in the transformed basis."""
    up, down = doublet(k)
    e = np.eye(9)
    sp = np.outer(e[up], e[down])
    s3 = 0.5 * (np.outer(e[up], e[up]) - np.outer(e[down], e[down]))
    return sp, sp.T.copy(), s3


def expected_tilde_casimir(k: int) -> np.ndarray:
    up, down = doublet(k)
    c = np.zeros((9, 9))
    c[up, up] = c[down, down] = 0.75
    return c


def _transform(P, A):
    return P @ A @ P.T


def leakage(A: np.ndarray, layout=BLOCK_LAYOUT) -> float:
    mask = np.zeros((9, 9), dtype=bool)
    for b in layout:
        mask[np.ix_(b.indices, b.indices)] = True
    out = np.abs(A[~mask])
    return float(out.max()) if out.size else 0.0


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple
    P: np.ndarray
    orthogonality_residual: float
    leakage: float

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(b.shape[0] for b in self.blocks)


def block_diagonalize(H: np.ndarray, tol: float = 1e-9) -> BlockDecomposition:
    """Split ``H`` (phi1 = phi2 regime) into the six blocks of :data:`BLOCK_LAYOUT`.

    Also verifies that P carries every SU(2) set and Casimir onto its dyadic
    form; raises :class:`StructureError` on leakage and
    :class:`InconsistencyError` if the operator forms disagree.
    """
    P = block_transform()
    ortho = float(np.abs(P @ P.T - np.eye(9)).max())
    if ortho > tol:
        raise InconsistencyError(f"P is not orthogonal (residual {ortho:.3e})")
    for k in (1, 2, 3):
        s = su2_set(k)
        sp, sm, s3 = expected_tilde_su2(k)
        res = max(
            np.abs(_transform(P, s.plus) - sp).max(),
            np.abs(_transform(P, s.minus) - sm).max(),
            np.abs(_transform(P, s.S3) - s3).max(),
            np.abs(_transform(P, s.casimir) - expected_tilde_casimir(k)).max(),
        )
        if res > tol:
            raise InconsistencyError(f"SU(2) set {k} is not dyadic after P (residual {res:.3e})")
    Ht = _transform(P, H)
    leak = leakage(Ht)
    if leak > tol:
        raise StructureError(f"P H P^T leaks {leak:.3e} outside its blocks")
    blocks = tuple(Ht[np.ix_(b.indices, b.indices)] for b in BLOCK_LAYOUT)
    return BlockDecomposition(blocks, P, ortho, leak)


# --- SU(2) form of the subsystem Hamiltonians -----------------------------


def su2_form(d: DriveParams, k: int, t: float, flip_23: bool = True) -> np.ndarray:
    """Subsystem ``k`` Hamiltonian assembled from its SU(2) set (9x9).

    For subsystems 2 and 3 these coefficients reproduce ``H`` only with
    the set taken in its flipped orientation (``S+ <-> S-``, ``S3 -> -S3``);
    ``flip_23=False`` uses the set literally.
    """
    if not d.n1 == d.n2 == 1:
        raise ParameterError("the SU(2) form is stated for n1 = n2 = 1")
    b = baxter_coeffs(np.exp(1j * d.theta)).b
    bc = b.conjugate()
    phi = d.n1 * d.omega * t
    s = su2_set(k)
    if k != 1 and flip_23:
        s = s.flipped()
    C = energy_scale(d, k)
    z = 2 * math.sqrt(2) / 3 * math.sin(d.theta)
    if k == 1:
        cp, cm = -1j * bc * np.exp(2j * phi) / 6, 1j * b * np.exp(-2j * phi) / 6
    else:
        cp, cm = -1j * b * np.exp(1j * phi) / 6, 1j * bc * np.exp(-1j * phi) / 6
    return C * (cp * s.plus + cm * s.minus + z * s.S3)


def embedded_block(H: np.ndarray, k: int) -> np.ndarray:
    idx = SUBSYSTEM_TRIPLES[k]
    out = np.zeros_like(H)
    out[np.ix_(idx, idx)] = H[np.ix_(idx, idx)]
    return out


def su2_hamiltonian_check(d: DriveParams, t: float, flip_23: bool = True) -> dict[int, float]:
    """Frobenius residual between each ``H^(k)`` and its SU(2) form."""
    H = hamiltonian(d, t)
    return {
        k: float(np.linalg.norm(embedded_block(H, k) - su2_form(d, k, t, flip_23)))
        for k in (1, 2, 3)
    }


# --- oscillator / Bloch-sphere picture -------------------------------------


@dataclass(frozen=True)
class OscillatorForm:
    """Bloch-sphere parametrization of the spin-1/2 doublets."""

    theta: float
    omega: float
    hbar: float
    cos_alpha: float

    @property
    def alpha(self) -> float:
        return math.acos(self.cos_alpha)

    @property
    def frequencies(self) -> tuple[float, float, float]:
        """Oscillator frequencies of the three doublets."""
        f = self.omega * self.cos_alpha
        return (2 * f, f, f)

    @property
    def solid_angle(self) -> float:
        return 2 * math.pi * (1 - self.cos_alpha)

    def berry_phases(self) -> dict[str, float]:
        """``(+, 0, -)`` phases ``-+ solid_angle / 2`` (not reduced)."""
        return {"+": -self.solid_angle / 2, "0": 0.0, "-": self.solid_angle / 2}

    def beta(self, phi: float) -> float:
        """Azimuth of the subsystem-1 field at drive phase ``phi`` in ``[0, 2 pi)``."""
        bc = baxter_coeffs(np.exp(1j * self.theta)).b.conjugate()
        z = -1j * bc * np.exp(2j * phi)
        return float(np.angle(z)) % (2 * math.pi)

    def cos_beta(self, phi: float) -> float:
        """Closed form of ``cos beta``; agrees with ``cos(self.beta(phi))``."""
        st, ct = math.sin(self.theta), math.cos(self.theta)
        return (-st * math.cos(2 * phi) + 3 * ct * math.sin(2 * phi)) / math.sqrt(9 - 8 * st * st)

    def spin_hamiltonian(self, phi: float) -> np.ndarray:
        """``2 cos(a) S3 + sin(a) e^{i b} S+ + sin(a) e^{-i b} S-`` as a 2x2 matrix."""
        a, b = self.alpha, self.beta(phi)
        return np.array([
            [math.cos(a), math.sin(a) * np.exp(1j * b)],
            [math.sin(a) * np.exp(-1j * b), -math.cos(a)],
        ])

    def doublet_hamiltonian(self, phi: float) -> np.ndarray:
        """Subsystem-1 doublet Hamiltonian ``-2 hbar omega cos(a) H0``."""
        return -2 * self.hbar * self.omega * self.cos_alpha * self.spin_hamiltonian(phi)

    def bloch_states(self, phi: float) -> tuple[np.ndarray, np.ndarray]:
        """``(|E+>, |E->)`` of the subsystem-1 doublet, up to global phase."""
        a, b = self.alpha, self.beta(phi)
        plus = np.array([-np.exp(1j * b) * math.sin(a / 2), math.cos(a / 2)])
        minus = np.array([math.cos(a / 2), np.exp(-1j * b) * math.sin(a / 2)])
        return plus, minus


def oscillator_params(theta: float, omega: float = 1.0, hbar: float = 1.0) -> OscillatorForm:
    if abs(math.sin(theta)) < SIN_EPS:
        raise DomainError("cos(alpha) = 0 is the critical point; sin(theta) must be nonzero")
    return OscillatorForm(theta, omega, hbar, 2 * math.sqrt(2) / 3 * math.sin(theta))
