"""Exact rational vectors, dot products, the triple-product sign and the 2-adic valuation.

Every predicate in the package that decides a verdict goes through this module,
so nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

RationalLike = Union[int, Fraction, str]

#: Valuation of zero.  Compares above every integer, so ``two_adic(0) > k`` for all ``k``.
INFINITY = math.inf


def as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, float):
        # exact binary value; callers that want decimal semantics pass strings
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


@dataclass(frozen=True, slots=True)
class Vec:
    """A 3-vector with exact rational coordinates."""

    x: Fraction
    y: Fraction
    z: Fraction

    def __init__(self, x: RationalLike, y: RationalLike, z: RationalLike) -> None:
        object.__setattr__(self, "x", as_fraction(x))
        object.__setattr__(self, "y", as_fraction(y))
        object.__setattr__(self, "z", as_fraction(z))

    @classmethod
    def of(cls, coords: Iterable[RationalLike]) -> Vec:
        x, y, z = coords
        return cls(x, y, z)

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def __getitem__(self, i: int) -> Fraction:
        return (self.x, self.y, self.z)[i]

    def __neg__(self) -> Vec:
        return Vec(-self.x, -self.y, -self.z)

    def __add__(self, other: Vec) -> Vec:
        return Vec(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Vec) -> Vec:
        return Vec(self.x - other.x, self.y - other.y, self.z - other.z)

    def scale(self, c: RationalLike) -> Vec:
        c = as_fraction(c)
        return Vec(c * self.x, c * self.y, c * self.z)

    def norm2(self) -> Fraction:
        return dot(self, self)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def is_unit(self) -> bool:
        return self.norm2() == 1

    def cross(self, other: Vec) -> Vec:
        return Vec(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def to_floats(self) -> tuple[float, float, float]:
        return (float(self.x), float(self.y), float(self.z))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self) + ")"


def dot(u: Vec, v: Vec) -> Fraction:
    return u.x * v.x + u.y * v.y + u.z * v.z


def sign(q: Fraction | int) -> int:
    return (q > 0) - (q < 0)


def triple_sign(u: Vec, v: Vec, w: Vec) -> int:
    """Exact sign of ``(u.v)(u.w)(v.w)``."""
    return sign(dot(u, v)) * sign(dot(u, w)) * sign(dot(v, w))


def parallel(u: Vec, v: Vec) -> bool:
    return u.cross(v).is_zero()


def _v2_int(n: int) -> int:
    return (n & -n).bit_length() - 1


def two_adic(q: RationalLike) -> int | float:
    """2-adic valuation of a rational; :data:`INFINITY` for zero."""
    q = as_fraction(q)
    if q == 0:
        return INFINITY
    return _v2_int(q.numerator) - _v2_int(q.denominator)


def two_adic_abs(q: RationalLike) -> Fraction:
    """The 2-adic absolute value ``2 ** -v2(q)``, with ``|0| = 0``."""
    v = two_adic(q)
    if v == INFINITY:
        return Fraction(0)
    return Fraction(2) ** -v
