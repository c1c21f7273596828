"""Dense complex linear algebra used throughout the package.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.  The
two-qutrit composite basis is ordered ``|i>|j> -> 3*i + j`` everywhere.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DimensionError, NotHermitianError

#: Default absolute tolerance for exact algebraic identities on O(1) matrices.
ATOL = 1e-10


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionError(f"expected a 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Kronecker product; ``kron(A, B)[d*i + a, d*j + b] = A[i, j] B[a, b]``."""
    return np.kron(as_matrix(a), as_matrix(b))


def dagger(a) -> np.ndarray:
    return np.conj(np.swapaxes(np.asarray(a), -1, -2))


def trace(a) -> complex:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError("trace of a non-square matrix")
    return complex(np.trace(a))


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(np.asarray(a)))


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a


def is_hermitian(a, rtol: float = ATOL) -> bool:
    a = np.asarray(a)
    scale = max(float(np.linalg.norm(a)), 1.0)
    return float(np.linalg.norm(a - dagger(a))) <= rtol * scale


class HermEig(NamedTuple):
    """Spectrum of a Hermitian matrix.

    ``eigenvalues`` are real and ascending; column ``i`` of ``eigenvectors``
    belongs to ``eigenvalues[i]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def herm_eig(a) -> HermEig:
    """Full eigendecomposition of a Hermitian matrix (or a stack of them).

    Raises :class:`NotHermitianError` if ``a`` is not Hermitian to within
    ``1e-10`` relative to its Frobenius norm.
    """
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise DimensionError(f"expected square matrices, got shape {a.shape}")
    scale = np.maximum(np.linalg.norm(a, axis=(-2, -1)), 1.0)
    skew = np.linalg.norm(a - dagger(a), axis=(-2, -1))
    if np.any(skew > ATOL * scale):
        raise NotHermitianError(f"input is not Hermitian (skew norm {np.max(skew):.3e})")
    w, v = np.linalg.eigh(a)
    return HermEig(w, v)


def partial_transpose_A(rho, d: int) -> np.ndarray:
    """Transpose the first tensor factor of a ``d*d`` x ``d*d`` operator.

    With composite index ``d*i + a``:
    ``(rho^{T_A})[(i,a), (j,b)] = rho[(j,a), (i,b)]``.
    """
    rho = as_matrix(rho)
    if rho.shape != (d * d, d * d):
        raise DimensionError(f"expected a {d * d}x{d * d} matrix, got {rho.shape}")
    r = rho.reshape(d, d, d, d)  # (i, a, j, b)
    return r.transpose(2, 1, 0, 3).reshape(d * d, d * d)


def trace_norm(a) -> float:
    """Sum of singular values."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError("trace norm of a non-square matrix")
    return float(np.sum(np.linalg.svd(a, compute_uv=False)))


def ket(index: int, dim: int = 9) -> np.ndarray:
    e = np.zeros(dim, dtype=np.complex128)
    e[index] = 1.0
    return e


def basis_index(i: int, j: int, d: int = 3) -> int:
    """Composite index of ``|i>|j>``."""
    return d * i + j


def unit_matrix(i: int, j: int, dim: int = 3) -> np.ndarray:
    """The matrix unit ``|i><j|``."""
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[i, j] = 1.0
    return m
