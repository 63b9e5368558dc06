import math
import random
from fractions import Fraction

import numpy as np
import pytest

from orthocolor.exact import Vec
from orthocolor.spherical import (
    TAU,
    Arc,
    ArcUnion,
    Cap,
    GreatCircle,
    NotACover,
    Region,
    Triangle,
    canonical_partition,
    cap,
    circle2_structure,
    circle_meets_region,
    dominates,
    equatorial_band,
)

EQUATOR = GreatCircle(Vec(0, 0, 1))


def test_circle_meets_cap_examples():
    assert circle_meets_region(EQUATOR, cap((1, 0, 0), 0.5))
    assert not circle_meets_region(EQUATOR, cap((0, 0, 1), 0.5))
    big = Region((Cap((0, 0, 1), 2.0),))
    for n in [(1, 2, 3), (0, 0, 1), (5, -1, 0)]:
        assert circle_meets_region(GreatCircle(Vec(*n)), big)


def test_circle_meets_triangle():
    north = Region((Triangle(((1, 0, 0.5), (0, 1, 0.5), (-1, -1, 0.6))),))
    assert not circle_meets_region(EQUATOR, north)
    assert circle_meets_region(GreatCircle(Vec(1, 0, 0)), north)
    straddle = Region((Triangle(((1, 0, -0.2), (0, 1, 0.2), (1, 1, 0.3))),))
    assert circle_meets_region(EQUATOR, straddle)


def test_antipodal_flag_does_not_change_circle_tests():
    r = Region((Cap((0.3, 0.1, 0.9), 0.2),))
    ra = Region(r.primitives, antipodal=True)
    rng = random.Random(1)
    for _ in range(50):
        c = GreatCircle(Vec(*(Fraction(rng.randint(-9, 9)) for _ in range(3))) + Vec(0, 0, Fraction(1, 7)))
        assert circle_meets_region(c, r) == circle_meets_region(c, ra)


SIGNED_PERMS = [
    (perm, signs)
    for perm in [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    for signs in [(1, 1, 1), (-1, 1, 1), (1, -1, -1), (-1, -1, 1)]
]


def _apply(perm, signs, v):
    return tuple(signs[i] * v[perm[i]] for i in range(3))


@pytest.mark.parametrize("perm, signs", SIGNED_PERMS[:12])
def test_rotation_invariance(perm, signs):
    rng = random.Random(hash((perm, signs)) & 0xFFFF)
    regions = [
        Region((Cap((0.6, 0.0, 0.8), 0.3),)),
        Region((Triangle(((1, 0.1, 0.2), (0.1, 1, 0.3), (0.2, 0.2, 1))),)),
    ]
    for r in regions:
        moved = Region(tuple(
            Cap(_apply(perm, signs, p.center), p.radius) if isinstance(p, Cap)
            else Triangle(tuple(_apply(perm, signs, v) for v in p.vertices))
            for p in r.primitives
        ))
        for _ in range(40):
            n = Vec(*(Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(3)))
            if n.is_zero():
                continue
            moved_n = Vec(*_apply(perm, signs, tuple(n)))
            assert circle_meets_region(GreatCircle(n), r) == circle_meets_region(GreatCircle(moved_n), moved)


def test_region_validation():
    with pytest.raises(ValueError):
        Cap((0, 0, 1), 0.0)
    with pytest.raises(ValueError):
        Cap((0, 0, 1), math.pi)
    with pytest.raises(ValueError):
        Triangle(((1, 0, 0), (-1, 0, 0), (0, 1, 0)))
    with pytest.raises(ValueError):
        GreatCircle(Vec(0, 0, 0))
    assert GreatCircle(Vec(0, 0, 2)) == EQUATOR


def test_region_round_trip():
    r = Region((Cap((0, 0, 1), 0.1), Triangle(((1, 0, 0), (0, 1, 0), (0, 0, 1)))), antipodal=True)
    assert Region.from_dict(r.to_dict()) == r
    assert Region.from_dict({"type": "cap", "center": [0, 0, 1], "radius": 0.1}) == cap((0, 0, 1), 0.1)


def test_dominates_band():
    res = dominates(cap((0.2, 0.3, 0.9), 0.05), equatorial_band(0.005), 5000, seed=1)
    assert not res.refuted and res.samples == 5000


def test_dominates_refuted_with_exact_witness():
    d, s = cap((0, 0, 1), 0.1), cap((1, 0, 0), 0.1)
    res = dominates(d, s, 1000, seed=2)
    assert res.refuted
    assert circle_meets_region(res.witness, d)
    assert not circle_meets_region(res.witness, s)
    # hand-built witness: the circle x = 0 passes the pole and misses the cap at (1, 0, 0)
    hand = GreatCircle(Vec(1, 0, 0))
    assert circle_meets_region(hand, d) and not circle_meets_region(hand, s)


def test_dominates_zero_samples():
    res = dominates(cap((0, 0, 1), 0.1), cap((1, 0, 0), 0.1), 0, seed=0)
    assert not res.refuted and res.samples == 0


@pytest.mark.parametrize("seed", range(5))
def test_cap_inside_cap_unrefuted(seed):
    rng = np.random.default_rng(seed)
    c = rng.normal(size=3)
    c /= np.linalg.norm(c)
    offset = rng.normal(size=3) * 0.02
    res = dominates(cap(c + offset, 0.05), cap(c, 0.2), 2000, seed)
    assert not res.refuted


def test_dominates_deterministic():
    d, s = cap((0, 0, 1), 0.3), cap((0.5, 0.5, 0.7), 0.2)
    assert dominates(d, s, 3000, 9) == dominates(d, s, 3000, 9)


def test_arcs():
    a = Arc.between(3 * math.pi / 2, TAU)
    assert a.contains(0.0) and a.contains(3 * math.pi / 2) and not a.contains(1.0)
    wrap = Arc.between(5.0, 1.0)
    assert wrap.contains(0.5) and wrap.contains(6.0) and not wrap.contains(3.0)
    assert ArcUnion.of([(0, 1), (1, 2)]).merged() == [Arc(0.0, 2.0)]
    with pytest.raises(ValueError):
        Arc.between(1.0, 1.0)


def test_circle2_canonical():
    res = circle2_structure(*canonical_partition())
    assert res.confirmed and res.theta0 == 0.0
    assert len(res.details["intersection"]) == 4


def test_circle2_rotated():
    res = circle2_structure(*canonical_partition(0.3))
    assert res.confirmed
    assert res.theta0 == pytest.approx(0.3, abs=1e-9)


def test_circle2_half_circles_fail():
    res = circle2_structure(ArcUnion.of([(0, math.pi)]), ArcUnion.of([(math.pi, TAU)]))
    assert not res.hypothesis_holds
    a, b, c = (np.array([math.cos(t), math.sin(t)]) for t in res.witness_triple)
    assert (a @ b) * (a @ c) * (b @ c) < 0


def test_circle2_not_a_cover():
    with pytest.raises(NotACover):
        circle2_structure(ArcUnion.of([(0, 1)]), ArcUnion.of([(2, 3)]))


def test_circle2_structure_violation_reported():
    # a sliver between grid points is invisible to the hypothesis check but not a quarter arc
    b1, b2 = canonical_partition()
    b1 = ArcUnion(b1.arcs + (Arc(0.001, 0.0005),))
    res = circle2_structure(b1, b2)
    assert res.hypothesis_holds and res.structure_holds is False
