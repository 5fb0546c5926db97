"""Exception types shared across the solver library."""


class GridHamError(Exception):
    """Base class for all gridham errors."""


class OutsideShapeError(GridHamError, ValueError):
    """A coordinate was used with a shape that does not contain it."""


class OddSizedError(GridHamError, ValueError):
    """Hamiltonian cycle requested for a rectangle with an odd vertex count."""


class DegenerateDimensionError(GridHamError, ValueError):
    """Hamiltonian cycle requested for a rectangle with a side of length 1."""


class NotAcceptableError(GridHamError, ValueError):
    """A path was requested for an instance the predicate rejects.

    ``reason`` names the violated condition (``color-incompatible``, ``F1``,
    ``F2``, ``F3`` or ``foot-F3``).
    """

    def __init__(self, reason: str):
        super().__init__(f"instance is not acceptable: {reason}")
        self.reason = reason


class NoFacingEdgeError(GridHamError, RuntimeError):
    """Path and cycle share no pair of facing edges; the decomposition is broken."""


class DecompositionExhaustedError(GridHamError, RuntimeError):
    """Every construction strategy failed on an instance the predicate accepted.

    This is never swallowed: it distinguishes a construction gap from a
    predicate rejection, which matters when testing the decision procedure
    against ground truth.
    """
