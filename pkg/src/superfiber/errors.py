"""Domain error types shared across the package.

Everything derived from DomainError means "the mathematics rejected the
input" (the CLI maps these to exit code 2), as opposed to malformed
flags or I/O problems.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for mathematical domain violations."""


class AllZero(DomainError):
    """All projective coordinates are zero."""


class BasePointVanishing(DomainError):
    """The designated base point has y = 0, so it cannot define a twist."""


class PointNotOnTwist(DomainError):
    """Point does not satisfy the twisted curve equation."""


class NotAdmissible(DomainError):
    """x-coordinates do not have pairwise distinct r-th powers."""


class DimensionMismatch(DomainError):
    """Projective point length does not match the fiber dimension."""


class DegenerateBase(DomainError):
    """alpha_0 and alpha_1 have equal r-th powers; the inverse map is undefined."""


class NotOnFiber(DomainError):
    """Point does not satisfy every fiber equation."""


class DegenerateParameter(DomainError):
    """Conic parameterization produced the zero vector."""


class CoordinateVanishing(DomainError):
    """A cubic point with X*Y*Z = 0 is outside the mapped locus."""


class NotOnCubic(DomainError):
    """Point does not satisfy the diagonal cubic equation."""


class WrongShape(DomainError):
    """Operation requires a specific (n, s); got something else."""


class TrivialPoint(DomainError):
    """Fiber point whose recovered curve degenerates (a*b = 0).

    Carries the degenerate coefficients so callers can report them.
    """

    def __init__(self, a, b):
        self.a = a
        self.b = b
        super().__init__(f"trivial fiber point: recovered a={a}, b={b}")


class MismatchReport(DomainError):
    """Raised when the embedded dataset reproduction finds mismatches."""

    def __init__(self, failures):
        self.failures = tuple(failures)
        lines = "; ".join(self.failures)
        super().__init__(f"{len(self.failures)} mismatch(es): {lines}")
