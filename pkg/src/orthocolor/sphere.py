"""Rational points on the unit sphere in primitive integer form."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import Vec


class NotOnSphere(ValueError):
    pass


@dataclass(frozen=True, slots=True, order=True)
class Quadruple:
    """Primitive ``(x, y, z, n)`` with ``x^2 + y^2 + z^2 = n^2`` and ``gcd(x, y, z) = 1``.

    Ordering is lexicographic on ``(n, x, y, z)``, which is the enumeration order.
    """

    n: int
    x: int
    y: int
    z: int

    def __init__(self, x: int, y: int, z: int, n: int) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)
        if n < 1 or x * x + y * y + z * z != n * n:
            raise NotOnSphere(f"({x}, {y}, {z}, {n}) is not on the sphere")
        if math.gcd(x, y, z) != 1:
            raise ValueError(f"({x}, {y}, {z}, {n}) is not primitive")
        # forced by primitivity: squares are 0 or 1 mod 4
        assert (x & 1) + (y & 1) + (z & 1) == 1 and n & 1

    @property
    def coords(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def odd_index(self) -> int:
        """0-based index of the unique odd coordinate."""
        for i, c in enumerate(self.coords):
            if c & 1:
                return i
        raise AssertionError("primitive quadruple without odd coordinate")

    def vec(self) -> Vec:
        n = self.n
        return Vec(Fraction(self.x, n), Fraction(self.y, n), Fraction(self.z, n))

    def __neg__(self) -> Quadruple:
        return Quadruple(-self.x, -self.y, -self.z, self.n)

    def __repr__(self) -> str:
        return f"Quadruple({self.x}, {self.y}, {self.z}, {self.n})"


def canonicalize(v: Vec) -> Quadruple:
    if v.norm2() != 1:
        raise NotOnSphere(f"{v} has squared norm {v.norm2()}")
    n = math.lcm(v.x.denominator, v.y.denominator, v.z.denominator)
    return Quadruple(int(v.x * n), int(v.y * n), int(v.z * n), n)


def _signed_permutations(a: int, b: int, c: int):
    seen = set()
    for p in itertools.permutations((a, b, c)):
        for sx, sy, sz in itertools.product((1, -1), repeat=3):
            t = (sx * p[0], sy * p[1], sz * p[2])
            if t not in seen:
                seen.add(t)
                yield t


def enumerate_points(height: int) -> list[Quadruple]:
    """All primitive quadruples with ``1 <= n <= height``, sorted on ``(n, x, y, z)``.

    Searches sorted triples ``0 <= a <= b <= c`` and expands signs and
    permutations, which visits the same solutions as a full triple loop.
    """
    if height < 1:
        raise ValueError("height must be >= 1")
    h2 = height * height
    out = []
    for a in range(height + 1):
        for b in range(a, height + 1):
            ab = a * a + b * b
            if ab + b * b > h2:
                break
            for c in range(b, height + 1):
                s = ab + c * c
                if s > h2:
                    break
                n = math.isqrt(s)
                if n * n != s or math.gcd(a, b, c) != 1:
                    continue
                out.extend(Quadruple(x, y, z, n) for x, y, z in _signed_permutations(a, b, c))
    out.sort()
    return out


def points_array(points: list[Quadruple]) -> np.ndarray:
    return np.array([p.coords for p in points], dtype=np.int64).reshape(-1, 3)


def orthogonal_pairs(points: list[Quadruple], block: int = 2048) -> list[tuple[int, int]]:
    """All index pairs ``i < j`` whose integer dot product is zero.

    Uses blocked int64 matrix products; coordinates are bounded by the height so
    the products are exact for any height below ~10^9.
    """
    arr = points_array(points)
    if arr.size and int(np.abs(arr).max()) ** 2 * 3 >= 2**62:
        raise OverflowError("coordinates too large for exact int64 dot products")
    pairs: list[tuple[int, int]] = []
    m = len(points)
    for start in range(0, m, block):
        stop = min(start + block, m)
        dots = arr[start:stop] @ arr[start:].T
        ii, jj = np.nonzero(dots == 0)
        jj = jj + start
        ii = ii + start
        keep = ii < jj
        pairs.extend(zip(ii[keep].tolist(), jj[keep].tolist()))
    pairs.sort()
    return pairs
