"""Gell-Mann generators and the coupled SU(3) / SU(2) realizations on C^3 x C^3.

Single-site conventions: ``|0>, |1>, |2>`` are the standard unit vectors and
the Gell-Mann matrices are in their standard order.  Ladder operators follow

    I+- = I1 +- i I2,   V+- = I4 -+ i I5,   U+- = I6 +- i I7,   Y = (2/sqrt3) I8

so that ``I+ = |0><1|``, ``V+ = |2><0|`` and ``U+ = |1><2|``.  Note the sign
flip in ``V+-`` relative to the other two.

Each of the three coupled sets acts on one invariant triple of two-qutrit
basis states (see :data:`braidberry.braid.SUBSYSTEM_TRIPLES`).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import commutator, kron, unit_matrix

SQRT3 = np.sqrt(3.0)

_E = unit_matrix
_ID3 = np.eye(3, dtype=np.complex128)


@dataclass(frozen=True)
class Su3Generators:
    """Single-qutrit SU(3) generators.

    ``lam[0..7]`` hold lambda_1 .. lambda_8 and ``I[mu] = lam[mu] / 2``.
    ``ladder`` maps ``'I+', 'I-', 'V+', 'V-', 'U+', 'U-'`` to 3x3 matrices.
    """

    lam: tuple
    I: tuple
    ladder: dict
    I3: np.ndarray
    Y: np.ndarray

    def gen(self, mu: int) -> np.ndarray:
        """``I_mu`` with the 1-based index used in physics texts."""
        return self.I[mu - 1]


@lru_cache(maxsize=None)
def gell_mann() -> Su3Generators:
    lam = (
        _E(0, 1) + _E(1, 0),
        -1j * _E(0, 1) + 1j * _E(1, 0),
        _E(0, 0) - _E(1, 1),
        _E(0, 2) + _E(2, 0),
        -1j * _E(0, 2) + 1j * _E(2, 0),
        _E(1, 2) + _E(2, 1),
        -1j * _E(1, 2) + 1j * _E(2, 1),
        np.diag([1.0, 1.0, -2.0]).astype(np.complex128) / SQRT3,
    )
    I = tuple(m / 2 for m in lam)
    ladder = {
        "I+": I[0] + 1j * I[1],
        "I-": I[0] - 1j * I[1],
        "V+": I[3] - 1j * I[4],
        "V-": I[3] + 1j * I[4],
        "U+": I[5] + 1j * I[6],
        "U-": I[5] - 1j * I[6],
    }
    return Su3Generators(lam=lam, I=I, ladder=ladder, I3=I[2], Y=2 / SQRT3 * I[7])


def structure_constants(g: Su3Generators | None = None) -> np.ndarray:
    """Structure constants ``f[l, m, n]`` (0-based) from ``[I_l, I_m] = i f_lmn I_n``.

    Computed as ``f_lmn = -2i tr([I_l, I_m] I_n)``, which relies on
    ``tr(I_a I_b) = delta_ab / 2``.
    """
    g = g or gell_mann()
    f = np.zeros((8, 8, 8))
    for a in range(8):
        for b in range(8):
            c = commutator(g.I[a], g.I[b])
            for n in range(8):
                f[a, b, n] = np.real(-2j * np.trace(c @ g.I[n]))
    return f


@dataclass(frozen=True)
class CoupledSu3Set:
    """One of the three SU(3) realizations on the two-qutrit space.

    ``ladder`` holds the 9x9 ``I+-, V+-, U+-``; ``I3`` and ``Y`` are diagonal.
    ``I`` holds the Hermitian generators ``I_1 .. I_8`` recovered from the
    ladder combinations.
    """

    k: int
    ladder: dict
    I3: np.ndarray
    Y: np.ndarray
    I: tuple

    def gen(self, mu: int) -> np.ndarray:
        return self.I[mu - 1]


# Which single-site ladder families build I+-, U+-, V+- of each set.
_LADDER_PAIRS = {
    1: {"I": ("I", "I"), "U": ("U", "U"), "V": ("V", "V")},
    2: {"I": ("U", "V"), "U": ("V", "I"), "V": ("I", "U")},
    3: {"I": ("V", "U"), "U": ("I", "V"), "V": ("U", "I")},
}


@lru_cache(maxsize=None)
def coupled_set(k: int) -> CoupledSu3Set:
    """Build coupled set ``k`` in {1, 2, 3} from single-site operators.

    Tensor leg 1 is the first factor of the Kronecker product.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"set index must be 1, 2 or 3, got {k!r}")
    g = gell_mann()
    ladder = {}
    for fam, (left, right) in _LADDER_PAIRS[k].items():
        for s in "+-":
            ladder[fam + s] = kron(g.ladder[left + s], g.ladder[right + s])

    T1, T2 = kron(g.I3, _ID3), kron(_ID3, g.I3)
    Y1, Y2 = kron(g.Y, _ID3), kron(_ID3, g.Y)
    TY = kron(g.I3, g.Y) + kron(g.Y, g.I3)
    TT = kron(g.I3, g.I3)
    YY = kron(g.Y, g.Y)
    if k == 1:
        I3 = (T1 + T2) / 3 + TY / 2
        Y = (Y1 + Y2) / 3 + 2 / 3 * TT - YY / 2
    elif k == 2:
        I3 = (-(T1 + T2) / 3 + (Y1 - Y2) / 2 + TY) / 2
        Y = -(T1 - T2) / 3 - (Y1 + Y2) / 6 + 2 / 3 * TT - YY / 2
    else:
        I3 = (-(T1 + T2) / 3 - (Y1 - Y2) / 2 + TY) / 2
        Y = (T1 - T2) / 3 - (Y1 + Y2) / 6 + 2 / 3 * TT - YY / 2

    L = ladder
    gens = (
        (L["I+"] + L["I-"]) / 2,
        (L["I+"] - L["I-"]) / 2j,
        I3,
        (L["V+"] + L["V-"]) / 2,
        (L["V-"] - L["V+"]) / 2j,
        (L["U+"] + L["U-"]) / 2,
        (L["U+"] - L["U-"]) / 2j,
        SQRT3 / 2 * Y,
    )
    return CoupledSu3Set(k=k, ladder=ladder, I3=I3, Y=Y, I=gens)


def coupled_sets() -> tuple[CoupledSu3Set, CoupledSu3Set, CoupledSu3Set]:
    return coupled_set(1), coupled_set(2), coupled_set(3)


@dataclass(frozen=True)
class Su2Set:
    """SU(2) realization built from coupled set ``k`` and its Casimir ``J``."""

    k: int
    plus: np.ndarray
    minus: np.ndarray
    S3: np.ndarray
    casimir: np.ndarray

    def flipped(self) -> "Su2Set":
        """The same algebra under ``S+ <-> S-``, ``S3 -> -S3``."""
        return Su2Set(self.k, self.minus, self.plus, -self.S3, self.casimir)


def su2_set(k: int, coupled: CoupledSu3Set | None = None) -> Su2Set:
    c = coupled if coupled is not None else coupled_set(k)
    if c.k != k:
        raise ValueError(f"coupled set {c.k} passed for SU(2) set {k}")
    L = c.ladder
    sp = (L["V-"] + L["U+"]) / np.sqrt(2)
    sm = (L["V+"] + L["U-"]) / np.sqrt(2)
    s3 = 0.75 * c.Y + 0.25 * (L["I+"] + L["I-"])
    J = 0.5 * (sp @ sm + sm @ sp) + s3 @ s3
    return Su2Set(k=k, plus=sp, minus=sm, S3=s3, casimir=J)
