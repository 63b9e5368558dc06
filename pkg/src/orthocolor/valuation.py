"""2-adic colorings of the rational sphere.

``gz_color`` is the 3-coloring by the odd coordinate of the primitive form.
``baek_set`` covers the rational sphere by nine orthogonal-pair-free sets
``C_jk = (Y_j & A_k) | (X_j - A_k)`` plus ``X_3``, where ``X_i`` (``Y_j``)
holds points whose ``i``-th coordinate has strictly (weakly) maximal 2-adic
absolute value and ``A_1..A_4`` are the octahedral classes of a basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import two_adic
from .octahedral import STANDARD, OrthonormalBasis, octa_class
from .sphere import Quadruple, orthogonal_pairs, points_array

BAEK_SETS = ("C11", "C12", "C13", "C14", "C21", "C22", "C23", "C24", "X3")


def gz_color(p: Quadruple) -> int:
    """1-based index of the odd coordinate."""
    return p.odd_index() + 1


def _valuations(p: Quadruple) -> list[int | float]:
    return [two_adic(Fraction(c, p.n)) for c in p.coords]


def x_members(p: Quadruple) -> list[int]:
    """Indices ``i`` (1-based) with ``p`` in ``X_i``: strictly maximal 2-adic absolute value."""
    v = _valuations(p)
    # larger absolute value means smaller valuation
    return [i + 1 for i in range(3) if all(v[i] < v[k] for k in range(3) if k != i)]


def y_members(p: Quadruple) -> list[int]:
    v = _valuations(p)
    return [j + 1 for j in range(2) if all(v[j] <= v[k] for k in range(3) if k != j)]


def baek_set(p: Quadruple, base: OrthonormalBasis = STANDARD) -> list[str]:
    """Every one of the nine covering sets that contains ``p``, in priority order."""
    xs = x_members(p)
    ys = y_members(p)
    a = octa_class(p.vec(), base)
    out = []
    for j in (1, 2):
        for k in (1, 2, 3, 4):
            if (j in ys and a == k) or (j in xs and a != k):
                out.append(f"C{j}{k}")
    if 3 in xs:
        out.append("X3")
    return out


def baek_partition(points: Sequence[Quadruple], base: OrthonormalBasis = STANDARD) -> list[str]:
    """First containing set for each point, in the order of :data:`BAEK_SETS`."""
    out = []
    for p in points:
        members = baek_set(p, base)
        if not members:
            raise AssertionError(f"{p} lies in none of the nine sets")
        out.append(members[0])
    return out


@dataclass
class Report:
    points: int
    pairs_checked: int
    violations: list[dict] = field(default_factory=list)
    coverage_holes: list[list[int]] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.coverage_holes

    def to_dict(self) -> dict:
        d = {
            "points": self.points,
            "pairs_checked": self.pairs_checked,
            "violations": self.violations,
            "coverage_holes": self.coverage_holes,
        }
        d.update(self.extra)
        return d


def _quad(p: Quadruple) -> list[int]:
    return [p.x, p.y, p.z, p.n]


def verify_gz(
    points: Sequence[Quadruple],
    pairs: Sequence[tuple[int, int]] | None = None,
    probe: dict | None = None,
) -> Report:
    """Check that no orthogonal pair shares a GZ class; optionally run a density probe.

    ``probe`` takes ``centers`` (number of random cap centers), ``radius`` and ``seed``.
    """
    points = list(points)
    if pairs is None:
        pairs = orthogonal_pairs(points)
    colors = [gz_color(p) for p in points]
    report = Report(len(points), len(pairs))
    for i, j in pairs:
        if colors[i] == colors[j]:
            report.violations.append({"pair": [_quad(points[i]), _quad(points[j])], "class": colors[i]})
    if probe:
        report.extra["density_probe"] = density_probe(points, colors, **probe)
    return report


def density_probe(
    points: Sequence[Quadruple], colors: Sequence[int], centers: int, radius: float, seed: int
) -> dict:
    """Which classes occur inside random caps of the given angular radius."""
    rng = np.random.default_rng(seed)
    c = rng.normal(size=(centers, 3))
    c /= np.linalg.norm(c, axis=1, keepdims=True)
    arr = points_array(list(points)).astype(float)
    arr /= np.array([p.n for p in points], dtype=float)[:, None]
    inside = (c @ arr.T) >= math.cos(radius)
    colors = np.asarray(colors)
    caps = []
    for k in range(centers):
        present = sorted({int(x) for x in np.unique(colors[inside[k]])})
        caps.append({"center": [round(float(x), 12) for x in c[k]], "classes": present})
    return {
        "radius": radius,
        "seed": seed,
        "caps": caps,
        "caps_with_all_classes": sum(len(cap["classes"]) == 3 for cap in caps),
    }


def gz_covering_radius(centers: Sequence[Quadruple], points: Sequence[Quadruple]) -> float:
    """Smallest angular radius at which every cap around a center sees all three GZ classes."""
    pts = points_array(list(points))
    n = np.array([p.n for p in points], dtype=np.int64)
    colors = np.array([gz_color(p) for p in points])
    worst = 0.0
    for c in centers:
        dots = pts @ np.array(c.coords, dtype=np.int64)
        cos = dots / (n * c.n)
        for k in (1, 2, 3):
            best = float(cos[colors == k].max())
            worst = max(worst, math.acos(min(1.0, best)))
    return worst


def verify_baek(
    points: Sequence[Quadruple],
    base: OrthonormalBasis = STANDARD,
    pairs: Sequence[tuple[int, int]] | None = None,
) -> Report:
    """Exact check that no orthogonal pair shares a covering set or a partition label."""
    points = list(points)
    if pairs is None:
        pairs = orthogonal_pairs(points)
    members = [baek_set(p, base) for p in points]
    report = Report(len(points), len(pairs))
    report.coverage_holes = [_quad(p) for p, m in zip(points, members) if not m]
    labels = [m[0] if m else None for m in members]
    for i, j in pairs:
        shared = sorted(set(members[i]) & set(members[j]), key=BAEK_SETS.index)
        if shared:
            report.violations.append(
                {"kind": "covering", "pair": [_quad(points[i]), _quad(points[j])], "sets": shared}
            )
        if labels[i] is not None and labels[i] == labels[j]:
            report.violations.append(
                {"kind": "partition", "pair": [_quad(points[i]), _quad(points[j])], "sets": [labels[i]]}
            )
    return report
