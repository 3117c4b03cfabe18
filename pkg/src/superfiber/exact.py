"""Exact scalar and projective-coordinate arithmetic.

All scalars are `fractions.Fraction` values, which are always stored
reduced with a positive denominator, so equality is structural and
hashing is free.  No floating point is used anywhere in this package.

Projective tuples are kept in a canonical integer form: denominators
cleared, content (gcd) reduced to 1, first nonzero entry positive.  Two
inputs that differ by a nonzero rational scale normalize identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import AllZero

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def rational(value: RationalLike) -> Fraction:
    """Parse a rational from an int, Fraction, or a "p/q" / "p" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        # tolerate unicode minus from copied sources
        return Fraction(value.strip().replace("−", "-"))
    raise ValueError(f"not a rational: {value!r}")


def rational_str(q: RationalLike) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(rational(q))


def _floor_nth_root(n: int, s: int) -> int:
    # floor(n ** (1/s)) for n >= 0 via integer Newton iteration
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0
    if s == 1:
        return n
    if s == 2:
        return math.isqrt(n)
    x = 1 << -(-n.bit_length() // s)  # >= true root
    while True:
        y = ((s - 1) * x + n // x ** (s - 1)) // s
        if y >= x:
            return x
        x = y


def int_nth_root(n: int, s: int) -> Optional[int]:
    """Exact integer s-th root of n >= 0, or None if n is not a perfect power."""
    r = _floor_nth_root(n, s)
    return r if r ** s == n else None


def sth_root_exact(x: RationalLike, s: int) -> Optional[Fraction]:
    """Exact rational s-th root of x, or None if no rational root exists.

    For even s the non-negative root is returned; for odd s the root has
    the sign of x.  Works on numerator and denominator separately, which
    is valid because they are coprime.
    """
    if s < 2:
        raise ValueError("root order must be >= 2")
    q = rational(x)
    negative = q < 0
    if negative and s % 2 == 0:
        return None
    num, den = abs(q.numerator), q.denominator
    rn = int_nth_root(num, s)
    if rn is None:
        return None
    rd = int_nth_root(den, s)
    if rd is None:
        return None
    return Fraction(-rn if negative else rn, rd)


@dataclass(frozen=True)
class ProjectivePoint:
    """Canonical integer representative of a point [c_0 : ... : c_k].

    Construct via normalize_projective(); the tuple stored here already
    has content 1 and a positive leading nonzero entry.
    """

    coords: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __str__(self) -> str:
        return "[" + " : ".join(str(c) for c in self.coords) + "]"

    def fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self.coords)

    def to_obj(self) -> list[str]:
        return [str(c) for c in self.coords]


def normalize_projective(coords: Sequence[RationalLike]) -> ProjectivePoint:
    """Canonical projective representative of a coordinate tuple.

    Raises AllZero when every coordinate vanishes.  Scaling the input by
    any nonzero rational yields the identical output.
    """
    values = [rational(c) for c in coords]
    if len(values) < 2:
        raise ValueError("projective point needs at least 2 coordinates")
    if all(v == 0 for v in values):
        raise AllZero("all projective coordinates are zero")
    scale = math.lcm(*(v.denominator for v in values))
    ints = [int(v * scale) for v in values]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    lead = next(c for c in ints if c != 0)
    if lead < 0:
        ints = [-c for c in ints]
    return ProjectivePoint(tuple(ints))


def projective_from_obj(obj: Iterable[str]) -> ProjectivePoint:
    return normalize_projective([rational(c) for c in obj])
