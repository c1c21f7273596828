"""H = i hbar dR/dt R^dagger, its three blocks, and their spectra."""
import numpy as np

from braidberry.braid import off_block_leakage
from braidberry.dynamics import (
    DriveParams,
    b_coefficients_closed,
    energies_closed,
    hamiltonian,
    hamiltonian_block,
    numeric_spectrum,
    su3_expansion,
)

np.set_printoptions(precision=5, suppress=True)

d = DriveParams(theta=0.9, n1=-2, n2=1, omega=1.0)
H = hamiltonian(d, 0.37)
print("Hermitian:", np.allclose(H, H.conj().T), " off-block leakage:", off_block_leakage(H))

# The spectrum does not depend on t
for k in (1, 2, 3):
    e = energies_closed(d, k)
    print(f"k={k} closed  ", np.array([e["-"], e["0"], e["+"]]))
    for t in (0.0, 1.0, 2.5):
        print(f"     t={t:3.1f}   ", numeric_spectrum(d, k, t))

# SU(3) expansion coefficients, by trace projection and in closed form
for k in (1, 2):
    B = su3_expansion(hamiltonian_block(d, k, 0.37), k, d)
    print(f"B^({k}) projected", B)
    print(f"B^({k}) closed   ", b_coefficients_closed(d, k, 0.37))
