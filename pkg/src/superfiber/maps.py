"""Explicit maps between curves-with-points and fiber points.

The forward map sends a family member with points (P_0, ..., P_n),
base y_0 != 0, to its x-coordinates together with the fiber point

    [a*x_0^r + b : y_1*y_0^(s-1) : ... : y_n*y_0^(s-1)]
      ~ [y_0 : y_1 : ... : y_n].

The inverse recovers, from an admissible tuple and a fiber point,

    a = (Y_1^s - Y_0^s) / (w_1 - w_0),
    b = (w_1*Y_0^s - w_0*Y_1^s) / (w_1 - w_0),      w_i = alpha_i^r,

with points (alpha_i, Y_i); then a*alpha_i^r + b = Y_i^s holds for every
i exactly because Y lies on the fiber.  Composing the two is the
identity modulo the rescaling (a, b, y) ~ (t^s*a, t^s*b, t*y).

Fiber points with recovered a*b = 0 are the trivial ones; the inverse
map rejects them with a TrivialPoint error carrying (a, b).

Low-dimensional fibers admit classical models, implemented here as
well: a rational parameterization of sum-zero conics, the map from a
diagonal plane cubic with coefficient sum zero to U^3 + V^3 = abc*W^3,
its Weierstrass model S^2 = T^3 - 432*a^2*b^2*(a+b)^2, and the quartic
model v^2 = q(u) of an intersection of two quadrics in P^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    BasePointVanishing,
    CoordinateVanishing,
    DegenerateBase,
    DegenerateParameter,
    DimensionMismatch,
    NotOnCubic,
    NotOnFiber,
    TrivialPoint,
    WrongShape,
)
from .exact import (
    ProjectivePoint,
    Rational,
    RationalLike,
    normalize_projective,
    rational,
    rational_str,
    sth_root_exact,
)
from .family import AffinePoint, Curve, CurveWithPoints, FamilyParams
from .fiber import FiberPoint, XCoordinates, fiber_contains, fiber_equations


def phi_forward(cwp: CurveWithPoints) -> tuple[XCoordinates, FiberPoint]:
    """Map a curve with points to (x-coordinates, fiber point).

    Raises BasePointVanishing when the base y is zero and NotAdmissible
    when the x-coordinates have colliding r-th powers.
    """
    base = cwp.base
    if base.y == 0:
        raise BasePointVanishing("forward map needs a base point with y != 0")
    params = cwp.curve.params
    a_n = XCoordinates(tuple(p.x for p in cwp.points), params.r)
    scale = base.y ** (params.s - 1)
    coords = [p.y * scale for p in cwp.points]
    # the base coordinate equals y_0^s = a*x_0^r + b
    return a_n, normalize_projective(coords)


def phi_inverse(a_n: XCoordinates, Y: Sequence[RationalLike], s: int) -> CurveWithPoints:
    """Recover the curve and its points from a nontrivial fiber point."""
    coords = [rational(c) for c in Y]
    if len(coords) != a_n.n + 1:
        raise DimensionMismatch(f"expected {a_n.n + 1} coordinates, got {len(coords)}")
    w = a_n.rth_powers()
    if w[1] == w[0]:
        raise DegenerateBase("alpha_1^r = alpha_0^r")
    if not fiber_contains(a_n, s, coords):
        raise NotOnFiber("point does not satisfy the fiber equations")
    z0, z1 = coords[0] ** s, coords[1] ** s
    denom = w[1] - w[0]
    a = (z1 - z0) / denom
    b = (w[1] * z0 - w[0] * z1) / denom
    if a == 0 or b == 0:
        raise TrivialPoint(a, b)
    curve = Curve(FamilyParams(a_n.r, s), a, b)
    points = tuple(AffinePoint(alpha, y) for alpha, y in zip(a_n.alphas, coords))
    # CurveWithPoints verifies a*alpha_i^r + b = Y_i^s for every i
    return CurveWithPoints(curve, points, base_index=0)


def cwp_equivalent(first: CurveWithPoints, second: CurveWithPoints) -> bool:
    """Equality modulo the rescaling (a, b, y) ~ (t^s*a, t^s*b, t*y)."""
    if first.curve.params != second.curve.params:
        return False
    if first.base_index != second.base_index:
        return False
    if [p.x for p in first.points] != [p.x for p in second.points]:
        return False
    s = first.curve.params.s
    t = None
    for p, q in zip(first.points, second.points):
        if (p.y == 0) != (q.y == 0):
            return False
        if p.y != 0 and t is None:
            t = q.y / p.y
    if t is None:
        # no nonzero y anywhere; compare coefficients up to an s-th-power scale
        if (first.curve.a == 0) != (second.curve.a == 0):
            return False
        if (first.curve.b == 0) != (second.curve.b == 0):
            return False
        if first.curve.a != 0:
            ratio = second.curve.a / first.curve.a
        elif first.curve.b != 0:
            ratio = second.curve.b / first.curve.b
        else:
            return True
        if sth_root_exact(ratio, s) is None:
            return False
        return (
            second.curve.a == ratio * first.curve.a
            and second.curve.b == ratio * first.curve.b
        )
    ts = t ** s
    if second.curve.a != ts * first.curve.a or second.curve.b != ts * first.curve.b:
        return False
    return all(q.y == t * p.y for p, q in zip(first.points, second.points))


# ---------------------------------------------------------------------------
# conic parameterization


@dataclass(frozen=True)
class ConicSpec:
    """Conic alpha*X^2 + beta*Y^2 + gamma*Z^2 = 0 with gamma = -(alpha+beta)."""

    alpha: Rational
    beta: Rational

    def __post_init__(self):
        object.__setattr__(self, "alpha", rational(self.alpha))
        object.__setattr__(self, "beta", rational(self.beta))
        if self.alpha == 0 or self.beta == 0:
            raise ValueError("conic coefficients alpha, beta must be nonzero")

    @property
    def gamma(self) -> Rational:
        return -(self.alpha + self.beta)


def conic_param(spec: ConicSpec, u: RationalLike) -> ProjectivePoint:
    """Point [X : Y : Z] on the conic for parameter u.

    X = alpha*u^2 + 2*beta*u - beta, Y = -alpha*u^2 + 2*alpha*u + beta,
    Z = alpha*u^2 + beta; u = 1 gives the distinguished point [1 : 1 : 1].
    """
    uu = rational(u)
    al, be = spec.alpha, spec.beta
    X = al * uu * uu + 2 * be * uu - be
    Y = -al * uu * uu + 2 * al * uu + be
    Z = al * uu * uu + be
    if X == 0 and Y == 0 and Z == 0:
        raise DegenerateParameter(f"parameter u={uu} collapses to the zero vector")
    return normalize_projective([X, Y, Z])


# ---------------------------------------------------------------------------
# diagonal cubics and their Weierstrass model


@dataclass(frozen=True)
class CubicSpec:
    """Cubic alpha*X^3 + beta*Y^3 + gamma*Z^3 = 0 with gamma = -(alpha+beta) != 0."""

    alpha: Rational
    beta: Rational

    def __post_init__(self):
        object.__setattr__(self, "alpha", rational(self.alpha))
        object.__setattr__(self, "beta", rational(self.beta))
        if self.alpha == 0 or self.beta == 0:
            raise ValueError("cubic coefficients alpha, beta must be nonzero")
        if self.alpha + self.beta == 0:
            raise ValueError("alpha + beta must be nonzero (gamma != 0)")

    @property
    def gamma(self) -> Rational:
        return -(self.alpha + self.beta)

    def contains(self, P: Sequence[RationalLike]) -> bool:
        X, Y, Z = (rational(c) for c in P)
        return self.alpha * X ** 3 + self.beta * Y ** 3 + self.gamma * Z ** 3 == 0


@dataclass(frozen=True)
class DiagonalCubicPoint:
    """Point (U, V, W) on U^3 + V^3 = alpha*beta*gamma * W^3."""

    U: Rational
    V: Rational
    W: Rational


def _cubic_input(spec: CubicSpec, P: Sequence[RationalLike]):
    coords = [rational(c) for c in P]
    if len(coords) != 3:
        raise DimensionMismatch("cubic points live in P^2")
    X, Y, Z = coords
    if X * Y * Z == 0:
        raise CoordinateVanishing("the map is defined only where X*Y*Z != 0")
    if not spec.contains(coords):
        raise NotOnCubic(f"[{X} : {Y} : {Z}] is not on the cubic")
    return X, Y, Z


def cubic_to_diagonal(spec: CubicSpec, P: Sequence[RationalLike]) -> DiagonalCubicPoint:
    """Classical map from the cubic to U^3 + V^3 = alpha*beta*gamma*W^3."""
    X, Y, Z = _cubic_input(spec, P)
    al, be, ga = spec.alpha, spec.beta, spec.gamma
    x3, y3, z3 = X ** 3, Y ** 3, Z ** 3
    s_uv = -9 * al * be * ga * x3 * y3 * z3
    d_uv = (al * x3 - be * y3) * (be * y3 - ga * z3) * (ga * z3 - al * x3)
    U = (s_uv + d_uv) / 2
    V = (s_uv - d_uv) / 2
    W = 3 * (al * be * x3 * y3 + be * ga * y3 * z3 + al * ga * x3 * z3) * X * Y * Z
    return DiagonalCubicPoint(U, V, W)


@dataclass(frozen=True)
class WeierstrassPoint:
    """Point (T, S) on S^2 = T^3 - discriminant_term."""

    T: Rational
    S: Rational
    discriminant_term: Rational

    def on_curve(self) -> bool:
        return self.S ** 2 == self.T ** 3 - self.discriminant_term

    def to_obj(self) -> dict:
        return {
            "T": rational_str(self.T),
            "S": rational_str(self.S),
            "rhs_constant": rational_str(self.discriminant_term),
        }


def _discriminant_term(spec: CubicSpec) -> Rational:
    return 432 * spec.alpha ** 2 * spec.beta ** 2 * (spec.alpha + spec.beta) ** 2


def fermat_to_weierstrass(spec: CubicSpec, P: Sequence[RationalLike]) -> WeierstrassPoint:
    """Map a cubic point with X*Y*Z != 0 to S^2 = T^3 - 432*a^2*b^2*(a+b)^2."""
    X, Y, Z = _cubic_input(spec, P)
    al, be = spec.alpha, spec.beta
    x3, y3, z3 = X ** 3, Y ** 3, Z ** 3
    xyz = X * Y * Z
    T = 4 * (al * be * (x3 * z3 + y3 * z3 - x3 * y3) + z3 * (al ** 2 * x3 + be ** 2 * y3)) / xyz ** 2
    S = 4 * (al * x3 - be * y3) * (be * y3 + (al + be) * z3) * (al * x3 + (al + be) * z3) / xyz ** 3
    return WeierstrassPoint(T, S, _discriminant_term(spec))


def diagonal_to_weierstrass(spec: CubicSpec, dp: DiagonalCubicPoint) -> WeierstrassPoint:
    """Second leg of the chain: T = 12*abc*W/(U+V), S = 36*abc*(U-V)/(U+V)."""
    if dp.U + dp.V == 0:
        raise ValueError("U + V must be nonzero")
    abc = spec.alpha * spec.beta * spec.gamma
    T = 12 * abc * dp.W / (dp.U + dp.V)
    S = 36 * abc * (dp.U - dp.V) / (dp.U + dp.V)
    return WeierstrassPoint(T, S, _discriminant_term(spec))


# ---------------------------------------------------------------------------
# quartic model of the n = 3, s = 2 fiber


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return out


def _conic_coordinate_polys(spec: ConicSpec) -> tuple[list[Fraction], ...]:
    # ascending coefficient lists of X(u), Y(u), Z(u)
    al, be = spec.alpha, spec.beta
    X = [-be, 2 * be, al]
    Y = [be, 2 * al, -al]
    Z = [be, Fraction(0), al]
    return X, Y, Z


def quadrics_to_quartic(a_3: XCoordinates, s: int = 2) -> tuple[Rational, ...]:
    """Coefficients (q_0, ..., q_4) of the quartic model of an n = 3 fiber.

    The first quadric is parameterized by u; substituting into the
    second leaves v^2 = q(u), so (u, v) with q(u) a rational square lift
    to fiber points [X(u) : Y(u) : Z(u) : v].
    """
    if a_3.n != 3 or s != 2:
        raise WrongShape("quartic model needs n = 3 and s = 2")
    eq2, eq3 = fiber_equations(a_3, s)
    spec = ConicSpec(Fraction(eq2.c0), Fraction(eq2.c1))
    X, Y, _ = _conic_coordinate_polys(spec)
    x2 = _poly_mul(X, X)
    y2 = _poly_mul(Y, Y)
    q = [(-eq3.c0 * a - eq3.c1 * b) / Fraction(eq3.ci) for a, b in zip(x2, y2)]
    return tuple(q)


def quartic_value(coeffs: Sequence[Rational], u: RationalLike) -> Rational:
    uu = rational(u)
    value = Fraction(0)
    for c in reversed(list(coeffs)):
        value = value * uu + c
    return value


def lift_quartic_parameter(a_3: XCoordinates, u: RationalLike) -> Optional[FiberPoint]:
    """Fiber point [X(u) : Y(u) : Z(u) : v] when q(u) = v^2 is a rational
    square; None otherwise."""
    coeffs = quadrics_to_quartic(a_3)
    v = sth_root_exact(quartic_value(coeffs, u), 2)
    if v is None:
        return None
    eq2, _ = fiber_equations(a_3, 2)
    spec = ConicSpec(Fraction(eq2.c0), Fraction(eq2.c1))
    uu = rational(u)
    X, Y, Z = (quartic_value(poly, uu) for poly in _conic_coordinate_polys(spec))
    return normalize_projective([X, Y, Z, v])
