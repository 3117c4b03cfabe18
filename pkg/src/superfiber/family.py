"""The two-exponent curve family y^s = a*x^r + b and its twists.

A member is determined by exponents (r, s) and rational coefficients
(a, b); it is smooth exactly when a*b != 0.  Twisting by a marked point
(x_0, y_0) with y_0 != 0 produces the curve

    (a*x_0^r + b) * y^s = a*x^r + b

on which the marked point becomes (x_0, 1) and every other point
(x_i, y_i) becomes (x_i, y_i/y_0).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BasePointVanishing, PointNotOnTwist
from .exact import Rational, RationalLike, rational, rational_str


@dataclass(frozen=True)
class FamilyParams:
    """Exponent pair (r, s), both at least 2."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 2 or self.s < 2:
            raise ValueError(f"exponents must be >= 2, got r={self.r}, s={self.s}")


@dataclass(frozen=True)
class Curve:
    params: FamilyParams
    a: Rational
    b: Rational

    @property
    def is_smooth(self) -> bool:
        return self.a != 0 and self.b != 0

    def rhs(self, x: Rational) -> Rational:
        return self.a * x ** self.params.r + self.b

    def to_obj(self) -> dict:
        return {
            "r": self.params.r,
            "s": self.params.s,
            "a": rational_str(self.a),
            "b": rational_str(self.b),
        }

    @staticmethod
    def from_obj(obj: dict) -> "Curve":
        return Curve(
            FamilyParams(int(obj["r"]), int(obj["s"])),
            rational(obj["a"]),
            rational(obj["b"]),
        )


def make_curve(r: int, s: int, a: RationalLike, b: RationalLike) -> Curve:
    return Curve(FamilyParams(r, s), rational(a), rational(b))


@dataclass(frozen=True)
class AffinePoint:
    x: Rational
    y: Rational

    def to_obj(self) -> dict:
        return {"x": rational_str(self.x), "y": rational_str(self.y)}

    @staticmethod
    def from_obj(obj: dict) -> "AffinePoint":
        return AffinePoint(rational(obj["x"]), rational(obj["y"]))


def point(x: RationalLike, y: RationalLike) -> AffinePoint:
    return AffinePoint(rational(x), rational(y))


def contains_point(curve: Curve, p: AffinePoint) -> bool:
    """Exact membership test: p.y^s == a*p.x^r + b."""
    return p.y ** curve.params.s == curve.rhs(p.x)


@dataclass(frozen=True)
class CurveWithPoints:
    """A family member plus an ordered list of points on it.

    Invariants enforced here: every point satisfies the curve equation
    and the x-coordinates are mutually distinct.  The base point (which
    must have y != 0 for twisting and for the forward map) is checked by
    the operations that need it, so data with a vanishing base y can
    still be represented.
    """

    curve: Curve
    points: tuple[AffinePoint, ...]
    base_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if not self.points:
            raise ValueError("need at least one point")
        if not 0 <= self.base_index < len(self.points):
            raise ValueError(f"base_index {self.base_index} out of range")
        xs = [p.x for p in self.points]
        if len(set(xs)) != len(xs):
            raise ValueError("x-coordinates must be mutually distinct")
        for i, p in enumerate(self.points):
            if not contains_point(self.curve, p):
                raise ValueError(f"point {i} ({p.x}, {p.y}) is not on the curve")

    @property
    def base(self) -> AffinePoint:
        return self.points[self.base_index]

    def to_obj(self) -> dict:
        return {
            "curve": self.curve.to_obj(),
            "points": [p.to_obj() for p in self.points],
            "base_index": self.base_index,
        }

    @staticmethod
    def from_obj(obj: dict) -> "CurveWithPoints":
        return CurveWithPoints(
            Curve.from_obj(obj["curve"]),
            tuple(AffinePoint.from_obj(p) for p in obj["points"]),
            int(obj.get("base_index", 0)),
        )


def curve_genus(params: FamilyParams) -> int:
    """Genus of a smooth member: ((r-1)(s-1) + 1 - gcd(r, s)) / 2."""
    r, s = params.r, params.s
    num = (r - 1) * (s - 1) + 1 - gcd(r, s)
    if num % 2:
        raise AssertionError("superelliptic genus formula produced a half-integer")
    return num // 2


@dataclass(frozen=True)
class TwistedCurve:
    """The twist c0*y^s = a*x^r + b by a base point with c0 = a*x_0^r + b."""

    params: FamilyParams
    c0: Rational
    a: Rational
    b: Rational
    base: AffinePoint

    def contains_point(self, p: AffinePoint) -> bool:
        return self.c0 * p.y ** self.params.s == self.a * p.x ** self.params.r + self.b

    def to_obj(self) -> dict:
        return {
            "r": self.params.r,
            "s": self.params.s,
            "c0": rational_str(self.c0),
            "a": rational_str(self.a),
            "b": rational_str(self.b),
            "base": self.base.to_obj(),
        }


def twist_curve(cwp: CurveWithPoints) -> TwistedCurve:
    """Twist the curve by its base point; requires base y != 0."""
    base = cwp.base
    if base.y == 0:
        raise BasePointVanishing(f"base point ({base.x}, 0) cannot define a twist")
    c0 = cwp.curve.rhs(base.x)
    # c0 = y_0^s, nonzero exactly when y_0 is
    return TwistedCurve(cwp.curve.params, c0, cwp.curve.a, cwp.curve.b, base)


def twist_points(cwp: CurveWithPoints) -> list[AffinePoint]:
    """Images of the points on the twist: (x_i, y_i / y_0), base becomes (x_0, 1)."""
    base = cwp.base
    if base.y == 0:
        raise BasePointVanishing(f"base point ({base.x}, 0) cannot define a twist")
    return [AffinePoint(p.x, p.y / base.y) for p in cwp.points]


def untwist_point(tc: TwistedCurve, p: AffinePoint) -> AffinePoint:
    """Send a point on the twist back to the original curve: (x, y) -> (x, y_0 * y)."""
    if not tc.contains_point(p):
        raise PointNotOnTwist(f"({p.x}, {p.y}) does not satisfy c0*y^s = a*x^r + b")
    return AffinePoint(p.x, tc.base.y * p.y)
