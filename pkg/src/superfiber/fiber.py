"""Fiber curves over a fixed tuple of x-coordinates.

Fix exponents (r, s) and admissible x-coordinates (alpha_0, ..., alpha_n),
"admissible" meaning the r-th powers are pairwise distinct.  Writing
w_i = alpha_i^r, the fiber curve in P^n with coordinates [Y_0 : ... : Y_n]
is cut out by the n-1 equations (i = 2..n)

    (w_i - w_1) Y_0^s + (w_0 - w_i) Y_1^s + (w_1 - w_0) Y_i^s = 0,

equivalently det [[1, 1, 1], [w_0, w_1, w_i], [Y_0^s, Y_1^s, Y_i^s]] = 0.
The three coefficients of each equation telescope to zero, so
[1 : 1 : ... : 1] always lies on the fiber.  As a complete intersection
of n-1 degree-s hypersurfaces the fiber has genus

    g = 1 + s^(n-1) * ((n-1)(s-1) - 2) / 2

and gonality at least (s-1) * s^(n-2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, NotAdmissible
from .exact import (
    ProjectivePoint,
    Rational,
    RationalLike,
    normalize_projective,
    rational,
    rational_str,
)

# A fiber point is just a canonical projective tuple [Y_0 : ... : Y_n].
FiberPoint = ProjectivePoint


def is_admissible(alphas: Sequence[RationalLike], r: int) -> bool:
    """True iff the r-th powers of the given values are pairwise distinct."""
    if r < 2:
        raise ValueError("r must be >= 2")
    values = [rational(a) for a in alphas]
    if len(values) < 2:
        raise ValueError("need at least two x-coordinates")
    powers = [v ** r for v in values]
    return len(set(powers)) == len(powers)


@dataclass(frozen=True)
class XCoordinates:
    """An admissible tuple (alpha_0, ..., alpha_n), n >= 2, with its exponent r."""

    alphas: tuple[Rational, ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(rational(a) for a in self.alphas))
        if len(self.alphas) < 3:
            raise ValueError("a fiber needs n >= 2, i.e. at least 3 x-coordinates")
        if self.r < 2:
            raise ValueError("r must be >= 2")
        if not is_admissible(self.alphas, self.r):
            raise NotAdmissible(
                "x-coordinates must have pairwise distinct r-th powers"
            )

    @property
    def n(self) -> int:
        return len(self.alphas) - 1

    def rth_powers(self) -> tuple[Rational, ...]:
        return tuple(a ** self.r for a in self.alphas)

    def to_obj(self) -> dict:
        return {"alphas": [rational_str(a) for a in self.alphas], "r": self.r}

    @staticmethod
    def from_obj(obj: dict) -> "XCoordinates":
        return XCoordinates(tuple(rational(a) for a in obj["alphas"]), int(obj["r"]))


def x_coordinates(alphas: Sequence[RationalLike], r: int) -> XCoordinates:
    return XCoordinates(tuple(rational(a) for a in alphas), r)


@dataclass(frozen=True)
class FiberEquation:
    """c0*Y_0^s + c1*Y_1^s + ci*Y_i^s = 0 in canonical integer form.

    The coefficients are the power differences (w_i - w_1, w_0 - w_i,
    w_1 - w_0) rescaled so they are integers with gcd 1 and ci > 0;
    they always sum to zero.
    """

    i: int
    c0: int
    c1: int
    ci: int

    def evaluate(self, y0s: Rational, y1s: Rational, yis: Rational) -> Rational:
        return self.c0 * y0s + self.c1 * y1s + self.ci * yis

    def to_obj(self) -> dict:
        return {
            "i": self.i,
            "c0": str(self.c0),
            "c1": str(self.c1),
            "ci": str(self.ci),
        }


def _canonical_triple(c0: Fraction, c1: Fraction, ci: Fraction) -> tuple[int, int, int]:
    scale = math.lcm(c0.denominator, c1.denominator, ci.denominator)
    ints = [int(c0 * scale), int(c1 * scale), int(ci * scale)]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    if ints[2] < 0:
        ints = [-v for v in ints]
    return ints[0], ints[1], ints[2]


def fiber_equations(a_n: XCoordinates, s: int) -> list[FiberEquation]:
    """The n-1 defining equations of the fiber, for i = 2..n."""
    if s < 2:
        raise ValueError("s must be >= 2")
    w = a_n.rth_powers()
    equations = []
    for i in range(2, a_n.n + 1):
        c0, c1, ci = _canonical_triple(w[i] - w[1], w[0] - w[i], w[1] - w[0])
        equations.append(FiberEquation(i, c0, c1, ci))
    return equations


def fiber_equation_triples(a_n: XCoordinates, s: int) -> tuple[Rational, list[tuple[Rational, Rational]]]:
    """Equations rewritten as c * Y_i^s = A_i * Y_1^s - B_i * Y_0^s.

    Returns the shared pivot coefficient c = w_1 - w_0 and the raw pairs
    (A_i, B_i) = (w_i - w_0, w_i - w_1) for i = 2..n, without any gcd
    reduction, which is the layout used for golden-table comparison.
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    w = a_n.rth_powers()
    c = w[1] - w[0]
    pairs = [(w[i] - w[0], w[i] - w[1]) for i in range(2, a_n.n + 1)]
    return c, pairs


def fiber_equation_determinant(
    a_n: XCoordinates, s: int, i: int, Y: Sequence[RationalLike]
) -> Rational:
    """Evaluate equation i at Y via the symmetric determinant form.

    det [[1, 1, 1], [w_0, w_1, w_i], [Y_0^s, Y_1^s, Y_i^s]] expanded by
    cofactors along the first row; identical to evaluating the raw
    difference form.
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    if not 2 <= i <= a_n.n:
        raise ValueError(f"equation index must be in 2..{a_n.n}, got {i}")
    w = a_n.rth_powers()
    ys = [rational(c) for c in Y]
    z0, z1, zi = ys[0] ** s, ys[1] ** s, ys[i] ** s
    w0, w1, wi = w[0], w[1], w[i]
    return (w1 * zi - wi * z1) - (w0 * zi - wi * z0) + (w0 * z1 - w1 * z0)


def fiber_contains(a_n: XCoordinates, s: int, Y: Sequence[RationalLike]) -> bool:
    """True iff every fiber equation vanishes at Y."""
    coords = [rational(c) for c in Y]
    if len(coords) != a_n.n + 1:
        raise DimensionMismatch(
            f"expected {a_n.n + 1} coordinates, got {len(coords)}"
        )
    powers = [c ** s for c in coords]
    for eq in fiber_equations(a_n, s):
        if eq.evaluate(powers[0], powers[1], powers[eq.i]) != 0:
            return False
    return True


def canonical_fiber_point(Y: Sequence[RationalLike], s: int) -> FiberPoint:
    """Canonical representative of a fiber point.

    For even s each coordinate appears only through Y_i^s and sign flips
    stay on the fiber, so the representative takes absolute values;
    for odd s it is the usual projective normalization.
    """
    coords = [rational(c) for c in Y]
    if s % 2 == 0:
        coords = [abs(c) for c in coords]
    return normalize_projective(coords)


def fiber_genus(n: int, s: int) -> int:
    """Genus of the fiber: 1 + s^(n-1) * ((n-1)(s-1) - 2) / 2."""
    if n < 2 or s < 2:
        raise ValueError("need n >= 2 and s >= 2")
    num = s ** (n - 1) * ((n - 1) * (s - 1) - 2)
    if num % 2:
        raise AssertionError("fiber genus formula produced a half-integer")
    return 1 + num // 2


def lazarsfeld_bound(degrees: Sequence[int]) -> int:
    """Gonality lower bound (d_1 - 1) * d_2 * ... * d_m for a smooth
    complete intersection of hypersurfaces of the given degrees."""
    ds = sorted(degrees)
    if not ds or any(d < 2 for d in ds):
        raise ValueError("degrees must all be >= 2")
    bound = ds[0] - 1
    for d in ds[1:]:
        bound *= d
    return bound


def gonality_lower_bound(n: int, s: int) -> int:
    """Gonality lower bound (s-1) * s^(n-2) for the fiber in P^n."""
    if n < 2 or s < 2:
        raise ValueError("need n >= 2 and s >= 2")
    return lazarsfeld_bound([s] * (n - 1))


def n0_threshold(s: int) -> int:
    """Smallest n at which the fibers stop having infinitely many points:
    4 when s = 2, else 3."""
    if s < 2:
        raise ValueError("s must be >= 2")
    return 4 if s == 2 else 3


@dataclass(frozen=True)
class GeometryReport:
    genus: int
    gonality_lower_bound: int
    n0: int

    def to_obj(self) -> dict:
        return {
            "genus": self.genus,
            "gonality_lower_bound": self.gonality_lower_bound,
            "n0": self.n0,
        }


def geometry_report(n: int, s: int) -> GeometryReport:
    return GeometryReport(fiber_genus(n, s), gonality_lower_bound(n, s), n0_threshold(s))
