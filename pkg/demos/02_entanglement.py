"""Negativity of the states R(theta)|ij>, numeric against closed form."""
import numpy as np

from braidberry.braid import BraidParams
from braidberry.entanglement import (
    generate_state,
    maximally_entangled_basis,
    negativity,
    negativity_closed,
)

thetas = np.linspace(0, np.pi, 13)
print(" theta/pi   numeric    closed")
for th in thetas:
    psi = generate_state(BraidParams(th, 0.3, 1.7), 0)
    print(f"{th / np.pi:8.3f}  {negativity(psi):9.6f}  {negativity_closed(th):9.6f}")

# The maximum is at pi/3, not pi/2: entanglement is not monotonic in theta
fine = np.linspace(0, np.pi / 2, 100001)
print("argmax / pi:", fine[np.argmax(negativity_closed(fine))] / np.pi)

# Every column of R(pi/3) is maximally entangled, for any phases
basis = maximally_entangled_basis(0.8, -2.1)
print("column negativities:", np.round([negativity(basis[:, i]) for i in range(9)], 12))

# Phases do not change the negativity
a = negativity(generate_state(BraidParams(1.0, 0.0, 0.0), 5))
b = negativity(generate_state(BraidParams(1.0, 2.5, -0.9), 5))
print("phase independence:", abs(a - b))
