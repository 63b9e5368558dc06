"""Octahedral colorings and the octahedral / locally-octahedral predicates."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterator, Sequence

import numpy as np

from .exact import Vec, dot, sign

SEARCH_LIMIT = 50


@dataclass(frozen=True)
class OrthonormalBasis:
    u1: Vec
    u2: Vec
    u3: Vec

    def __post_init__(self):
        us = self.vectors
        for a in range(3):
            if dot(us[a], us[a]) != 1:
                raise ValueError(f"basis vector {a + 1} is not a unit vector")
            for b in range(a + 1, 3):
                if dot(us[a], us[b]) != 0:
                    raise ValueError(f"basis vectors {a + 1} and {b + 1} are not orthogonal")

    @property
    def vectors(self) -> tuple[Vec, Vec, Vec]:
        return (self.u1, self.u2, self.u3)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> OrthonormalBasis:
        return cls(*(Vec.of(r) for r in rows))

    def coords(self, p: Vec) -> tuple[Fraction, Fraction, Fraction]:
        return (dot(p, self.u1), dot(p, self.u2), dot(p, self.u3))

    def flipped(self, s2: int, s3: int) -> OrthonormalBasis:
        return OrthonormalBasis(self.u1, self.u2.scale(s2), self.u3.scale(s3))

    def rows(self) -> list[list[str]]:
        return [[str(c) for c in u] for u in self.vectors]


STANDARD = OrthonormalBasis(Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1))


def _cell(x, y, z) -> int:
    # the four half-open sets, read verbatim; 0 when none applies
    if x > 0 and y >= 0 and z >= 0:
        return 1
    if x <= 0 and y > 0 and z >= 0:
        return 2
    if x <= 0 and y <= 0 and z > 0:
        return 3
    if x > 0 and y < 0 and z > 0:
        return 4
    return 0


def octa_class(p: Vec, basis: OrthonormalBasis = STANDARD) -> int:
    """Class 1..4 of ``p`` in the octahedral 4-coloring attached to ``basis``.

    Each class is a half-open octant together with its antipode.
    """
    x, y, z = basis.coords(p)
    a = _cell(x, y, z)
    b = _cell(-x, -y, -z)
    if (a == 0) == (b == 0):
        raise AssertionError(f"octant cells not a partition at {p}: {a}, {b}")
    return a or b


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _sign_matrix(points: Sequence[Vec]) -> np.ndarray:
    m = len(points)
    s = np.zeros((m, m), dtype=np.int8)
    for i in range(m):
        for j in range(i, m):
            s[i, j] = s[j, i] = sign(dot(points[i], points[j]))
    return s


def _first_negative_triple(s: np.ndarray) -> tuple[int, int, int] | None:
    m = s.shape[0]
    for i in range(m):
        for j in range(i + 1, m):
            sij = s[i, j]
            if sij == 0:
                continue
            prod = sij * s[i, j + 1:] * s[j, j + 1:]
            hits = np.flatnonzero(prod < 0)
            if hits.size:
                return (i, j, j + 1 + int(hits[0]))
    return None


def is_locally_octahedral(points: Sequence[Vec]) -> Verdict:
    """Whether ``(u.v)(u.w)(v.w) >= 0`` for all triples; the witness is the first bad index triple."""
    if len(points) < 3:
        return Verdict(True)
    t = _first_negative_triple(_sign_matrix(points))
    return Verdict(t is None, t)


def is_octahedral_wrt(points: Sequence[Vec], basis: OrthonormalBasis) -> Verdict:
    for i, p in enumerate(points):
        c = basis.coords(p)
        if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
            return Verdict(False, (i,))
    return Verdict(True)


def find_negative_triple(
    points: Sequence[Vec], labels: Sequence[Hashable]
) -> tuple[Hashable, tuple[int, int, int]] | None:
    """First monochromatic triple with negative triple product.

    Classes are scanned in sorted label order and index triples lexicographically.
    """
    if len(points) != len(labels):
        raise ValueError("one label per point required")
    groups: dict = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    for lab in sorted(groups):
        idx = groups[lab]
        if len(idx) < 3:
            continue
        t = _first_negative_triple(_sign_matrix([points[i] for i in idx]))
        if t is not None:
            return lab, (idx[t[0]], idx[t[1]], idx[t[2]])
    return None


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def normalize(v: Vec) -> Vec | None:
    """``v / |v|`` if that is rational, else ``None``."""
    r = _rational_sqrt(v.norm2())
    if not r:
        return None
    return v.scale(1 / r)


def basis_containing(u: Vec) -> OrthonormalBasis:
    """A rational orthonormal basis whose first vector is the rational unit vector ``u``.

    Built from the reflection swapping ``e1`` and ``u``, which is rational.
    """
    e = (Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1))
    w = e[0] - u
    if w.is_zero():
        return STANDARD
    ww = w.norm2()
    cols = [b - w.scale(2 * dot(w, b) / ww) for b in e]
    return OrthonormalBasis(*cols)


def quaternion_basis(a: int, b: int, c: int, d: int) -> OrthonormalBasis:
    """Rows of the rotation matrix of the integer quaternion ``a + bi + cj + dk``."""
    q = a * a + b * b + c * c + d * d
    rows = (
        (a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)),
        (2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)),
        (2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d),
    )
    return OrthonormalBasis(*(Vec(*(Fraction(x, q) for x in r)) for r in rows))


def rotation_grid(size: int) -> Iterator[OrthonormalBasis]:
    """Rational rotations from primitive integer quaternions with entries in ``[-size, size]``."""
    seen = set()
    rng = range(-size, size + 1)
    quats = sorted(
        (q for q in itertools.product(range(size + 1), rng, rng, rng) if any(q)),
        key=lambda q: (sum(x * x for x in q), q),
    )
    for q in quats:
        if math.gcd(*q) != 1:
            continue
        if q[0] == 0 and next(x for x in q if x) < 0:
            continue
        basis = quaternion_basis(*q)
        if basis not in seen:
            seen.add(basis)
            yield basis


def candidate_bases(points: Sequence[Vec], grid: int = 2) -> Iterator[OrthonormalBasis]:
    """Candidate family searched by :func:`search_octahedral_basis`, in order.

    Standard basis; bases through each rationally normalizable point; bases
    spanned by each orthogonal pair of such points and their cross product;
    then the quaternion rotation grid.
    """
    yield STANDARD
    units = [normalize(p) for p in points]
    for u in units:
        if u is not None:
            yield basis_containing(u)
    for i, j in itertools.combinations(range(len(points)), 2):
        u, v = units[i], units[j]
        if u is not None and v is not None and dot(u, v) == 0:
            yield OrthonormalBasis(u, v, u.cross(v))
    yield from rotation_grid(grid)


def search_octahedral_basis(points: Sequence[Vec], grid: int = 2) -> OrthonormalBasis | None:
    """Look for a basis in which every point, up to sign, has nonnegative coordinates.

    Sound but not complete: a returned basis always verifies, while ``None``
    only means no member of :func:`candidate_bases` (with sign flips) works.
    """
    if len(points) > SEARCH_LIMIT:
        raise ValueError(f"at most {SEARCH_LIMIT} points supported, got {len(points)}")
    if not is_locally_octahedral(points):
        return None
    for basis in candidate_bases(points, grid):
        for s2, s3 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            b = basis.flipped(s2, s3)
            if is_octahedral_wrt(points, b):
                return b
    return None
