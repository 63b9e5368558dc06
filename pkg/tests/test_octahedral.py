import itertools
import random
from fractions import Fraction

import pytest

from orthocolor.exact import Vec, dot, triple_sign
from orthocolor.octahedral import (
    STANDARD,
    OrthonormalBasis,
    basis_containing,
    find_negative_triple,
    is_locally_octahedral,
    is_octahedral_wrt,
    octa_class,
    quaternion_basis,
    rotation_grid,
    search_octahedral_basis,
)
from orthocolor.sphere import enumerate_points, orthogonal_pairs
from orthocolor.valuation import gz_color

E1, E2, E3 = STANDARD.vectors
BAD = [E1, Vec("3/5", "4/5", 0), Vec("-3/5", "4/5", 0)]

SIGN_CELLS = [
    lambda x, y, z: x > 0 and y >= 0 and z >= 0,
    lambda x, y, z: x <= 0 and y > 0 and z >= 0,
    lambda x, y, z: x <= 0 and y <= 0 and z > 0,
    lambda x, y, z: x > 0 and y < 0 and z > 0,
]


def test_octa_class_examples():
    assert octa_class(E1) == 1
    assert octa_class(-E1) == 1
    assert octa_class(E3) == 3
    assert octa_class(E2) == 2
    assert octa_class(Vec("2/3", "-1/3", "2/3")) == 4


def test_octa_class_total_and_disjoint():
    pts = enumerate_points(100)[:10_000]
    assert len(pts) == 10_000
    for q in pts:
        x, y, z = q.coords
        cells = [i for i, c in enumerate(SIGN_CELLS) if c(x, y, z)]
        cells += [i + 4 for i, c in enumerate(SIGN_CELLS) if c(-x, -y, -z)]
        assert len(cells) == 1
        v = q.vec()
        assert octa_class(v) == cells[0] % 4 + 1 == octa_class(-v)


def test_octa_class_orthogonal_validity_small():
    pts = enumerate_points(15)
    cls = [octa_class(p.vec()) for p in pts]
    assert all(cls[i] != cls[j] for i, j in orthogonal_pairs(pts))


def test_octa_class_rotated_basis():
    basis = quaternion_basis(1, 1, 0, 0)
    pts = enumerate_points(11)
    cls = [octa_class(p.vec(), basis) for p in pts]
    assert all(cls[i] != cls[j] for i, j in orthogonal_pairs(pts))


def test_basis_invariants():
    with pytest.raises(ValueError):
        OrthonormalBasis(E1, E1, E3)
    with pytest.raises(ValueError):
        OrthonormalBasis(E1.scale(2), E2, E3)
    for b in itertools.islice(rotation_grid(2), 40):
        assert isinstance(b, OrthonormalBasis)


def test_basis_containing():
    for q in enumerate_points(9):
        b = basis_containing(q.vec())
        assert b.u1 == q.vec()


def test_locally_octahedral_examples():
    assert is_locally_octahedral(STANDARD.vectors)
    v = is_locally_octahedral(BAD)
    assert not v and v.witness == (0, 1, 2)
    assert is_locally_octahedral([])


def test_octahedral_wrt_examples():
    assert is_octahedral_wrt([E1, Vec("1/3", "2/3", "2/3")], STANDARD)
    v = is_octahedral_wrt([Vec("3/5", "-4/5", 0)], STANDARD)
    assert not v and v.witness == (0,)
    p = Vec("3/5", "-4/5", 0)
    assert is_octahedral_wrt([p], basis_containing(p))


def test_search_examples():
    b = search_octahedral_basis(list(STANDARD.vectors))
    assert b is not None and is_octahedral_wrt(STANDARD.vectors, b)
    assert search_octahedral_basis(BAD) is None
    for v in [Vec(1, -1, 0), Vec("3/5", "-4/5", 0), Vec(-1, 2, -7)]:
        b = search_octahedral_basis([v])
        assert b is not None and is_octahedral_wrt([v], b)


def test_search_needs_rotated_basis():
    # rotate a point cloud sitting inside one octant and check we recover a basis
    rot = quaternion_basis(2, 1, 1, 0)
    inside = [Vec(1, 2, 2), Vec(2, 1, 2), Vec(2, 2, 1), Vec(3, 0, 4)]
    pts = [Vec(*(dot(p, r) for r in rot.vectors)) for p in inside]
    assert not is_octahedral_wrt(pts, STANDARD)
    b = search_octahedral_basis(pts)
    assert b is not None and is_octahedral_wrt(pts, b)


def test_search_sound_and_local_test_necessary():
    rng = random.Random(5)
    pool = [q.vec() for q in enumerate_points(7)]
    found = 0
    for _ in range(100):
        pts = rng.sample(pool, rng.randint(1, 6))
        b = search_octahedral_basis(pts)
        if b is not None:
            found += 1
            assert is_octahedral_wrt(pts, b)
            assert is_locally_octahedral(pts)
    assert found > 0


def test_octa_classes_locally_octahedral():
    pts = [q.vec() for q in enumerate_points(7)]
    labels = [octa_class(p) for p in pts]
    assert find_negative_triple(pts, labels) is None


def test_negative_triple_gz():
    quads = enumerate_points(5)
    pts = [q.vec() for q in quads]
    found = find_negative_triple(pts, [gz_color(q) for q in quads])
    assert found is not None
    cls, (i, j, k) = found
    assert cls == 1
    assert gz_color(quads[i]) == gz_color(quads[j]) == gz_color(quads[k]) == 1
    assert triple_sign(pts[i], pts[j], pts[k]) == -1
    example = [Vec(1, 0, 0), Vec("3/5", "4/5", 0), Vec("-3/5", "4/5", 0)]
    assert triple_sign(*example) == -1


def test_negative_triple_trivial():
    assert find_negative_triple(BAD[:2], [1, 1]) is None
    assert find_negative_triple(BAD, [1, 1, 1]) == (1, (0, 1, 2))
    assert find_negative_triple(BAD, [1, 2, 1]) is None
