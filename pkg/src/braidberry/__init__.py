"""Numerical verification of a 9x9 unitary Yang-Baxter system.

Modules
-------
linalg        dense complex linear algebra primitives
su3           Gell-Mann generators, coupled SU(3) and SU(2) realizations
braid         M-matrix, Baxterized R, Hecke / Yang-Baxter / gauge checks
entanglement  states generated by R and their negativity
dynamics      H = i hbar dR/dt R^dagger, its blocks and closed eigensystem
berry         numeric and closed-form Berry phases
reduction     the phi1 = phi2 regime: SU(2) form, block diagonalization
verify        seeded randomized check suites
cli           command-line front end
"""
from .berry import BerryResult, berry_closed, berry_numeric, canonical_phase, wrap_distance
from .braid import BraidParams, build_M, build_R
from .dynamics import DriveParams, hamiltonian
from .entanglement import negativity, negativity_closed

__version__ = "0.1.0"

__all__ = [
    "BerryResult",
    "BraidParams",
    "DriveParams",
    "berry_closed",
    "berry_numeric",
    "build_M",
    "build_R",
    "canonical_phase",
    "hamiltonian",
    "negativity",
    "negativity_closed",
    "wrap_distance",
]
