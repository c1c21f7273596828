"""Exception types raised by braidberry."""


class BraidBerryError(Exception):
    """Base class for all library errors."""


class DimensionError(BraidBerryError, ValueError):
    """Operand shapes are incompatible."""


class NotHermitianError(BraidBerryError, ValueError):
    pass


class DomainError(BraidBerryError, ValueError):
    """Parameters fall on a point where the quantity is undefined.

    Typical case: ``sin(theta) == 0``, where the Hamiltonian vanishes and the
    adiabatic bands are degenerate.
    """


class ParameterError(BraidBerryError, ValueError):
    pass


class StructureError(BraidBerryError):
    """A matrix that should be block diagonal leaks outside its blocks."""


class StepCountError(BraidBerryError):
    """Band tracking lost the band; the time grid is too coarse."""


class InconsistencyError(BraidBerryError):
    """An analytic claim was contradicted by its numeric verification."""
