"""Great circles, cap/triangle regions, the domination falsifier and the two-arc check on S^1.

Floating point is used to sample and to filter candidates; every verdict that
names a witness re-checks it with exact rational arithmetic.  Float inputs are
taken at their exact binary value.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import Vec, dot

TAU = 2 * math.pi


class NotACover(ValueError):
    pass


@dataclass(frozen=True)
class GreatCircle:
    normal: Vec

    def __post_init__(self):
        if not isinstance(self.normal, Vec):
            object.__setattr__(self, "normal", Vec.of(self.normal))
        if self.normal.is_zero():
            raise ValueError("great circle needs a nonzero normal")

    def __eq__(self, other) -> bool:
        return isinstance(other, GreatCircle) and self.normal.cross(other.normal).is_zero()

    def __hash__(self) -> int:
        return 0


@dataclass(frozen=True)
class Cap:
    """Closed cap: points within angular distance ``radius`` of ``center``."""

    center: tuple[float, float, float]
    radius: float

    def __post_init__(self):
        c = np.asarray(self.center, dtype=float)
        norm = float(np.linalg.norm(c))
        if norm == 0:
            raise ValueError("cap center must be nonzero")
        object.__setattr__(self, "center", tuple(float(x) for x in c / norm))
        if not 0 < self.radius < math.pi:
            raise ValueError("cap radius must lie in (0, pi)")

    def reflected(self) -> Cap:
        return Cap(tuple(-x for x in self.center), self.radius)

    def to_dict(self) -> dict:
        return {"type": "cap", "center": list(self.center), "radius": self.radius}


@dataclass(frozen=True)
class Triangle:
    """Spherical triangle with geodesic edges, the cone over three vertices."""

    vertices: tuple[tuple[float, float, float], ...]

    def __post_init__(self):
        vs = []
        for v in self.vertices:
            a = np.asarray(v, dtype=float)
            n = float(np.linalg.norm(a))
            if n == 0:
                raise ValueError("triangle vertex must be nonzero")
            vs.append(tuple(float(x) for x in a / n))
        if len(vs) != 3:
            raise ValueError("triangle needs three vertices")
        for i in range(3):
            for j in range(i + 1, 3):
                if np.allclose(vs[i], [-x for x in vs[j]]):
                    raise ValueError("triangle vertices must not be antipodal")
        object.__setattr__(self, "vertices", tuple(vs))

    def reflected(self) -> Triangle:
        return Triangle(tuple(tuple(-x for x in v) for v in self.vertices))

    def to_dict(self) -> dict:
        return {"type": "triangle", "vertices": [list(v) for v in self.vertices]}


Primitive = Cap | Triangle


@dataclass(frozen=True)
class Region:
    primitives: tuple[Primitive, ...]
    antipodal: bool = False

    def __post_init__(self):
        if not self.primitives:
            raise ValueError("region needs at least one primitive")

    def expanded(self) -> tuple[Primitive, ...]:
        if not self.antipodal:
            return self.primitives
        return self.primitives + tuple(p.reflected() for p in self.primitives)

    def to_dict(self) -> dict:
        return {"antipodal": self.antipodal, "primitives": [p.to_dict() for p in self.primitives]}

    @classmethod
    def from_dict(cls, data) -> Region:
        if isinstance(data, list):
            data = {"primitives": data}
        elif "type" in data:
            data = {"primitives": [data]}
        prims = []
        for item in data["primitives"]:
            kind = item.get("type")
            if kind == "cap":
                prims.append(Cap(tuple(item["center"]), float(item["radius"])))
            elif kind == "triangle":
                prims.append(Triangle(tuple(tuple(v) for v in item["vertices"])))
            else:
                raise ValueError(f"unknown region primitive {kind!r}")
        return cls(tuple(prims), bool(data.get("antipodal", False)))

    @classmethod
    def load(cls, path) -> Region:
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


def cap(center, radius: float) -> Region:
    return Region((Cap(tuple(center), radius),))


def equatorial_band(half_width: float, segments: int = 16) -> Region:
    """Band ``|z| <= ~half_width`` around the equator as a ring of quadrilaterals."""
    h = math.sin(half_width)
    r = math.cos(half_width)
    prims = []
    for k in range(segments):
        t0, t1 = TAU * k / segments, TAU * (k + 1) / segments
        lo0 = (r * math.cos(t0), r * math.sin(t0), -h)
        hi0 = (r * math.cos(t0), r * math.sin(t0), h)
        lo1 = (r * math.cos(t1), r * math.sin(t1), -h)
        hi1 = (r * math.cos(t1), r * math.sin(t1), h)
        prims.append(Triangle((lo0, lo1, hi0)))
        prims.append(Triangle((lo1, hi1, hi0)))
    return Region(tuple(prims))


def _frac(v) -> tuple[Fraction, Fraction, Fraction]:
    return tuple(Fraction(x) for x in v)


def _fdot(a, b) -> Fraction:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _meets_exact(normal: Vec, prim: Primitive) -> bool:
    n = (normal.x, normal.y, normal.z)
    if isinstance(prim, Cap):
        q = _frac(prim.center)
        s = Fraction(math.sin(min(prim.radius, math.pi / 2)))
        d = _fdot(q, n)
        return d * d <= s * s * _fdot(q, q) * _fdot(n, n)
    signs = {(_fdot(_frac(v), n) > 0) - (_fdot(_frac(v), n) < 0) for v in prim.vertices}
    # all vertices strictly on one side keeps the whole geodesic triangle off the plane
    return signs not in ({1}, {-1})


def circle_meets_region(circle: GreatCircle, region: Region) -> bool:
    """Exact test of whether a great circle touches a region.

    A cap of center ``q`` and radius ``r`` is met iff ``|q.n| <= sin(r) |q| |n|``
    (always for ``r >= pi/2``), where ``sin(r)`` is taken at its float value.
    A triangle is met unless all three vertices lie strictly on one side.
    """
    return any(_meets_exact(circle.normal, p) for p in region.expanded())


def _meets_batch(normals: np.ndarray, region: Region) -> np.ndarray:
    hit = np.zeros(len(normals), dtype=bool)
    for prim in region.expanded():
        if isinstance(prim, Cap):
            s = math.sin(min(prim.radius, math.pi / 2))
            hit |= np.abs(normals @ np.asarray(prim.center)) <= s
        else:
            d = normals @ np.asarray(prim.vertices).T
            hit |= ~((d > 0).all(axis=1) | (d < 0).all(axis=1))
    return hit


@dataclass
class Domination:
    refuted: bool
    samples: int
    witness: GreatCircle | None = None
    rejected_candidates: int = 0

    def to_dict(self) -> dict:
        return {
            "verdict": "REFUTED" if self.refuted else "UNREFUTED",
            "samples": self.samples,
            "witness_normal": None if self.witness is None else [str(c) for c in self.witness.normal],
            "rejected_candidates": self.rejected_candidates,
        }


def dominates(d: Region, s: Region, sample_count: int, seed: int, batch: int = 65536) -> Domination:
    """Try to refute that ``d`` dominates ``s`` by sampling great circles that meet ``d``.

    Normals are uniform on the sphere, kept only when their circle meets ``d``.
    A candidate missing ``s`` is re-checked exactly before it is reported.
    Only ever returns REFUTED or UNREFUTED; sampling proves nothing.
    """
    rng = np.random.default_rng(seed)
    accepted = 0
    rejected = 0
    draws = 0
    max_draws = max(1000, 1000 * sample_count)
    while accepted < sample_count:
        normals = rng.normal(size=(batch, 3))
        normals /= np.linalg.norm(normals, axis=1, keepdims=True)
        draws += batch
        normals = normals[_meets_batch(normals, d)][: sample_count - accepted]
        if len(normals) == 0:
            if draws > max_draws:
                raise ValueError("region D is too small to sample circles meeting it")
            continue
        accepted += len(normals)
        miss = np.flatnonzero(~_meets_batch(normals, s))
        for k in miss:
            circle = GreatCircle(Vec.of(Fraction(float(x)) for x in normals[k]))
            if circle_meets_region(circle, d) and not circle_meets_region(circle, s):
                return Domination(True, accepted - len(normals) + int(k) + 1, circle, rejected)
            rejected += 1
    return Domination(False, accepted, None, rejected)


@dataclass(frozen=True)
class Arc:
    """Closed arc from ``start`` counter-clockwise over ``length`` radians."""

    start: float
    length: float

    @classmethod
    def between(cls, a: float, b: float) -> Arc:
        start = a % TAU
        length = (b - a) % TAU
        if length == 0 and b != a:
            length = TAU
        if length <= 0:
            raise ValueError(f"degenerate arc [{a}, {b}]")
        return cls(start, length)

    def contains(self, theta: float, eps: float = 1e-9) -> bool:
        return ((theta - self.start + eps) % TAU) <= self.length + 2 * eps


@dataclass(frozen=True)
class ArcUnion:
    arcs: tuple[Arc, ...]

    @classmethod
    def of(cls, pairs: Sequence[Sequence[float]]) -> ArcUnion:
        return cls(tuple(Arc.between(a, b) for a, b in pairs))

    def contains(self, theta: float) -> bool:
        return any(a.contains(theta) for a in self.arcs)

    def rotated(self, phi: float) -> ArcUnion:
        return ArcUnion(tuple(Arc((a.start + phi) % TAU, a.length) for a in self.arcs))

    def merged(self) -> list[Arc]:
        """Maximal arcs of the union, sorted by start."""
        if not self.arcs:
            return []
        if any(a.length >= TAU for a in self.arcs):
            return [Arc(0.0, TAU)]
        items = sorted((a.start, a.start + a.length) for a in self.arcs)
        out = [list(items[0])]
        for s, e in items[1:]:
            if s <= out[-1][1] + 1e-12:
                out[-1][1] = max(out[-1][1], e)
            else:
                out.append([s, e])
        if len(out) > 1 and out[-1][1] >= out[0][0] + TAU - 1e-12:
            first = out.pop(0)
            out[-1][1] = max(out[-1][1], first[1] + TAU)
        if out[-1][1] - out[-1][0] >= TAU:
            return [Arc(0.0, TAU)]
        return sorted((Arc(s % TAU, e - s) for s, e in out), key=lambda a: a.start)


@dataclass
class Circle2Result:
    hypothesis_holds: bool
    structure_holds: bool | None
    witness_triple: tuple[float, float, float] | None = None
    witness_set: int | None = None
    theta0: float | None = None
    details: dict = field(default_factory=dict)

    @property
    def confirmed(self) -> bool:
        return self.hypothesis_holds and bool(self.structure_holds)

    def to_dict(self) -> dict:
        return {
            "hypothesis_holds": self.hypothesis_holds,
            "structure_holds": self.structure_holds,
            "witness_triple": None if self.witness_triple is None else list(self.witness_triple),
            "witness_set": self.witness_set,
            "theta0": self.theta0,
            **self.details,
        }


def _grid_sign(d: np.ndarray, grid: int) -> np.ndarray:
    # exact sign of cos(2*pi*d/grid) for integer step differences d
    r = np.mod(d, grid)
    q = grid // 4
    out = np.where((r < q) | (r > grid - q), 1, -1).astype(np.int8)
    if grid % 4 == 0:
        out[(r == q) | (r == grid - q)] = 0
    return out


def _negative_grid_triple(idx: np.ndarray, grid: int) -> tuple[int, int, int] | None:
    s = _grid_sign(idx[:, None] - idx[None, :], grid)
    m = len(idx)
    for i in range(m):
        row = s[i]
        prod = row[:, None] * row[None, :] * s
        prod = np.triu(prod, 1)
        prod[: i + 1, :] = 0
        hits = np.argwhere(prod < 0)
        if hits.size:
            j, k = hits[0]
            return int(idx[i]), int(idx[j]), int(idx[k])
    return None


def circle2_structure(b1: ArcUnion, b2: ArcUnion, grid: int = 720) -> Circle2Result:
    """Check the two-set triple-product hypothesis on a grid and, if it holds, the structure.

    The structure asserted: each set is two antipodal closed arcs of length
    pi/2, and the two sets meet in four points ``theta0 + m*pi/2``, all up to
    one grid step.  Raises :class:`NotACover` if a grid point lies in neither set.
    """
    thetas = TAU * np.arange(grid) / grid
    in1 = np.array([b1.contains(t) for t in thetas])
    in2 = np.array([b2.contains(t) for t in thetas])
    holes = np.flatnonzero(~(in1 | in2))
    if holes.size:
        raise NotACover(f"angle {thetas[holes[0]]:.6f} is in neither set")
    for which, mask in ((1, in1), (2, in2)):
        t = _negative_grid_triple(np.flatnonzero(mask), grid)
        if t is not None:
            return Circle2Result(False, None, tuple(float(thetas[i]) for i in t), which)

    step = TAU / grid
    tol = step + 1e-9
    quarter = math.pi / 2

    def near(a: float, b: float) -> bool:
        d = (a - b) % TAU
        return min(d, TAU - d) <= tol

    details: dict = {}
    ok = True
    ends = []
    for which, b in ((1, b1), (2, b2)):
        arcs = b.merged()
        details[f"B{which}_arcs"] = [[a.start, (a.start + a.length) % TAU] for a in arcs]
        if len(arcs) != 2:
            ok = False
            continue
        a, c = arcs
        if abs(a.length - quarter) > tol or abs(c.length - quarter) > tol:
            ok = False
        if not near(c.start, a.start + math.pi):
            ok = False
        for arc in arcs:
            ends.extend([arc.start, arc.start + arc.length])
    theta0 = None
    if ok:
        theta0 = min(e % quarter for e in ends)
        if quarter - theta0 <= tol and all(near(e % quarter, 0.0) for e in ends):
            theta0 = 0.0
        ok = all(near((e - theta0) % quarter, 0.0) for e in ends)
        corners = sorted({round(((e - theta0) % TAU) / quarter) % 4 for e in ends})
        details["intersection"] = [(theta0 + m * quarter) % TAU for m in corners]
        ok = ok and corners == [0, 1, 2, 3]
    return Circle2Result(True, ok, theta0=theta0, details=details)


def canonical_partition(theta0: float = 0.0) -> tuple[ArcUnion, ArcUnion]:
    b1 = ArcUnion.of([(math.pi / 2, math.pi), (3 * math.pi / 2, TAU)])
    b2 = ArcUnion.of([(0.0, math.pi / 2), (math.pi, 3 * math.pi / 2)])
    return b1.rotated(theta0), b2.rotated(theta0)
