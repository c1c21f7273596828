"""Build M, check the Hecke relations, Baxterize, and check Yang-Baxter."""
import numpy as np

from braidberry.braid import (
    BraidParams,
    build_M,
    build_R,
    check_hecke,
    check_ybe,
    gauge_transform,
)

np.set_printoptions(precision=3, suppress=True, linewidth=120)

# M at phi1 = phi2 = 0 is a 0/1 matrix with 18 ones and no diagonal
M0 = build_M(BraidParams(0.0))
print(M0.real.astype(int))

# With phases switched on, M stays Hermitian and obeys M^2 = M + 2
p = BraidParams(theta=0.0, phi1=0.4, phi2=-1.3)
M = build_M(p)
print("Hermitian:", np.allclose(M, M.conj().T))
braided, quad = check_hecke(p)
print(f"braided relation residual {braided:.1e}, M^2 - M - 2 residual {quad:.1e}")

# Eigenvalues of M are -1 (six times) and 2 (three times)
print("spec(M):", np.round(np.linalg.eigvalsh(M), 12))

# R(theta) = (b + a M) / 3 is unitary and R(0) = 1
R = build_R(BraidParams(np.pi / 3, 0.4, -1.3))
print("unitary:", np.allclose(R.conj().T @ R, np.eye(9)))
print("R(0) = 1:", np.allclose(build_R(BraidParams(0.0, 0.4, -1.3)), np.eye(9)))

# Yang-Baxter on C^27 at a few spectral angles
for t1, t2 in [(0.3, 0.5), (np.pi / 3, np.pi / 5), (-1.0, 2.2)]:
    print(f"YBE residual at ({t1:.3f}, {t2:.3f}):", f"{check_ybe(t1, t2, 0.7, -1.1):.1e}")

# The phases are a local gauge: (P x P) R (P^-1 x P^-1) = R(theta, 0, 0)
g = gauge_transform(BraidParams(np.pi / 3, 0.4, 1.9))
print("gauge residual:", np.abs(g - build_R(BraidParams(np.pi / 3))).max())
