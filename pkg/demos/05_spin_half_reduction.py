"""At phi1 = phi2 the system splits into three spin-1/2 and three spin-0 parts."""
import math

import numpy as np

from braidberry.dynamics import DriveParams, hamiltonian
from braidberry.reduction import (
    BLOCK_LAYOUT,
    block_diagonalize,
    oscillator_params,
    su2_hamiltonian_check,
)

np.set_printoptions(precision=4, suppress=True)

d = DriveParams(theta=1.1, n1=1, n2=1)
t = 0.8
dec = block_diagonalize(hamiltonian(d, t))
print("block sizes:", dec.sizes, " leakage:", dec.leakage)
for b, blk in zip(BLOCK_LAYOUT, dec.blocks):
    print(f"{b.label:8s} spin {b.spin}:", np.linalg.eigvalsh(blk))

# Each subsystem Hamiltonian is a combination of one SU(2) realization
print("SU(2) form residuals:", su2_hamiltonian_check(d, t))

# Spin in a field of fixed polar angle alpha rotating in azimuth
osc = oscillator_params(d.theta)
print(f"cos(alpha) = {osc.cos_alpha:.6f}, frequencies {osc.frequencies}")
print("doublet block matches spin form:",
      np.allclose(dec.blocks[0], osc.doublet_hamiltonian(d.omega * t)))
plus, minus = osc.bloch_states(d.omega * t)
print("|E+> eigenvalue:", np.vdot(plus, osc.doublet_hamiltonian(d.omega * t) @ plus).real)

# Berry phase = -+ half the solid angle swept by the field
print("solid angle:", osc.solid_angle, " phases:", osc.berry_phases())
print("closed form:", -math.pi * (1 - 2 * math.sqrt(2) / 3 * math.sin(d.theta)))
