"""Two-qutrit states generated by R and their negativity."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .braid import BraidParams, build_R
from .linalg import herm_eig, partial_transpose_A, trace_norm

#: Negative eigenvalues of rho^{T_A} above this are treated as rounding noise.
CLAMP = 1e-12


def generate_state(p: BraidParams, basis_index: int = 0) -> np.ndarray:
    """``R(p) |e_k>``, the ``basis_index``-th column of R."""
    if not 0 <= basis_index < 9:
        raise ValueError(f"basis index must be in 0..8, got {basis_index}")
    return build_R(p)[:, basis_index].copy()


def density_matrix(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=np.complex128)
    return np.outer(psi, psi.conj())


def negativity(psi) -> float:
    """Negativity of a pure two-qutrit state.

    Computed as the absolute sum of the negative eigenvalues of the partial
    transpose; eigenvalues in ``[-1e-12, 0]`` are clamped to zero.
    """
    psi = np.asarray(psi, dtype=np.complex128)
    if abs(np.linalg.norm(psi) - 1) > 1e-10:
        raise ValueError("state is not normalized")
    w = herm_eig(partial_transpose_A(density_matrix(psi), 3)).eigenvalues
    w = np.where(w >= -CLAMP, 0.0, w)
    return float(-w.sum()) + 0.0


def negativity_trace_norm(psi) -> float:
    """``(||rho^{T_A}||_1 - 1) / 2`` via singular values; cross-check route."""
    return (trace_norm(partial_transpose_A(density_matrix(psi), 3)) - 1) / 2


def negativity_closed(theta: float) -> float:
    s, c = np.sin(theta), np.cos(theta)
    return 4 / 9 * (s * s + abs(s) * np.sqrt(1 + 8 * c * c))


def maximally_entangled_basis(phi1: float = 0.0, phi2: float = 0.0) -> np.ndarray:
    """Columns of ``R(pi/3, phi1, phi2)``: nine orthonormal states of negativity 1."""
    return build_R(BraidParams(np.pi / 3, phi1, phi2))


@dataclass(frozen=True)
class NegativityReport:
    theta: float
    basis_state: int
    numeric: float
    closed_form: float

    @property
    def abs_diff(self) -> float:
        return abs(self.numeric - self.closed_form)


def negativity_report(p: BraidParams, basis_index: int = 0) -> NegativityReport:
    return NegativityReport(
        theta=p.theta,
        basis_state=basis_index,
        numeric=negativity(generate_state(p, basis_index)),
        closed_form=negativity_closed(p.theta),
    )
